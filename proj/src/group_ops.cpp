#include "nqg/group_ops.hpp"

#include <algorithm>
#include <numeric>

#include "nqg/error.hpp"

namespace nqg {

bool Subgroup::contains(Element g) const { return std::binary_search(members.begin(), members.end(), g); }

Subgroup whole(const FiniteGroup& g) {
  Subgroup s;
  s.parent = &g;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), Element{0});
  s.generators.assign(g.generators().begin(), g.generators().end());
  return s;
}

Subgroup closure(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens) g.check(x);
  Subgroup s;
  s.parent = &g;
  s.generators.assign(gens.begin(), gens.end());
  std::vector<bool> seen(g.order(), false);
  seen[kIdentity] = true;
  s.members.push_back(kIdentity);
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    for (Element x : gens) {
      const Element y = g.multiply(s.members[i], x);
      if (!seen[y]) {
        seen[y] = true;
        s.members.push_back(y);
      }
    }
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

Subgroup closure(const FiniteGroup& g, std::initializer_list<Element> gens) {
  return closure(g, std::span<const Element>(gens.begin(), gens.size()));
}

Element InducedGroup::from_parent(Element g) const {
  const auto id = group->find(parent->key(g));
  if (!id) throw InputError("element is not in the subgroup");
  return *id;
}

InducedGroup induced_group(const Subgroup& s) {
  const FiniteGroup& g = *s.parent;
  std::vector<Key> keys;
  for (Element x : s.generators) keys.emplace_back(g.key(x).begin(), g.key(x).end());
  InducedGroup out;
  out.parent = &g;
  out.group = FiniteGroup::generate(g.backing_ptr(), keys);
  out.to_parent.resize(out.group->order());
  for (Element x = 0; x < out.group->order(); ++x) out.to_parent[x] = *g.find(out.group->key(x));
  return out;
}

Subgroup normal_closure(const Subgroup& h, std::span<const Element> gens) {
  const FiniteGroup& g = *h.parent;
  std::vector<Element> current;
  for (Element x : gens) {
    if (x != kIdentity) current.push_back(x);
  }
  Subgroup n = closure(g, current);
  for (std::size_t i = 0; i < n.generators.size(); ++i) {
    for (Element t : h.generators) {
      const Element c = g.conjugate(n.generators[i], t);
      if (!n.contains(c)) {
        current.push_back(c);
        n = closure(g, current);
      }
    }
  }
  return n;
}

Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<Element> comms;
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      comms.push_back(commutator(g, h.generators[i], h.generators[j]));
    }
  }
  return normal_closure(h, comms);
}

Subgroup center(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<Element> central;
  for (Element x : h.members) {
    bool ok = true;
    for (Element t : h.generators) {
      if (g.multiply(x, t) != g.multiply(t, x)) {
        ok = false;
        break;
      }
    }
    if (ok) central.push_back(x);
  }
  Subgroup z;
  z.parent = &g;
  z.members = central;  // already sorted: h.members is
  // a small generating set: greedy in id order
  std::vector<bool> in(g.order(), false);
  std::vector<Element> span{kIdentity};
  in[kIdentity] = true;
  for (Element x : central) {
    if (in[x]) continue;
    z.generators.push_back(x);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (Element s : z.generators) {
        const Element y = g.multiply(span[i], s);
        if (!in[y]) {
          in[y] = true;
          span.push_back(y);
        }
      }
    }
  }
  return z;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<Subgroup> series{h};
  for (;;) {
    const Subgroup& last = series.back();
    if (last.is_trivial()) break;
    std::vector<Element> comms;
    for (Element x : last.generators) {
      for (Element t : h.generators) comms.push_back(commutator(g, x, t));
    }
    Subgroup next = normal_closure(h, comms);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const Subgroup& h) {
  const auto series = lower_central_series(h);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool pair_class_below(const FiniteGroup& g, Element a, Element b, int q) {
  if (g.multiply(a, b) == g.multiply(b, a)) return q >= 2;
  if (q <= 2) return false;
  const auto c = nilpotency_class(closure(g, {a, b}));
  return c && *c < q;
}

std::optional<int> PairClassCache::get(Element a, Element b) {
  if (a > b) std::swap(a, b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find({a, b}); it != cache_.end()) return it->second;
  }
  auto c = nilpotency_class(closure(*group_, {a, b}));
  std::lock_guard lock(mutex_);
  cache_.emplace(std::pair{a, b}, c);
  return c;
}

bool PairClassCache::below(Element a, Element b, int q) {
  const FiniteGroup& g = *group_;
  if (g.multiply(a, b) == g.multiply(b, a)) return q >= 2;
  if (q <= 2) return false;
  const auto c = get(a, b);
  return c && *c < q;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> classes;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Element t : g.generators()) {
        const Element y = g.conjugate(cls[i], t);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Abelianization abelianization(const FiniteGroup& g) {
  const Subgroup d = derived_subgroup(g);
  const std::size_t n = g.order();
  std::vector<std::uint32_t> label(n, static_cast<std::uint32_t>(-1));
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (label[x] != static_cast<std::uint32_t>(-1)) continue;
    const auto idx = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element m : d.members) label[g.multiply(x, m)] = idx;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<std::uint32_t>> table(k, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) table[a][b] = label[g.multiply(reps[a], reps[b])];
  }
  Abelianization out;
  out.quotient = FiniteGroup::from_table(std::move(table));
  out.map.source = &g;
  out.map.target = out.quotient.get();
  out.map.images.assign(label.begin(), label.end());
  return out;
}

NilqResult is_nilq_map(const MapTable& phi, int q) {
  if (q < 2) throw InputError("nil_q check needs q >= 2");
  if (!phi.source || !phi.target || phi.images.size() != phi.source->order()) {
    throw InputError("map table does not match its source group");
  }
  for (Element x : phi.images) phi.target->check(x);
  const FiniteGroup& g = *phi.source;
  const FiniteGroup& h = *phi.target;
  PairClassCache cache(g);
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (!cache.below(a, b, q)) continue;
      if (h.multiply(phi.images[a], phi.images[b]) != phi.images[g.multiply(a, b)]) {
        return NilqResult{false, std::pair{a, b}};
      }
    }
  }
  return {};
}

}  // namespace nqg
