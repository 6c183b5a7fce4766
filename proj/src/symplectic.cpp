#include "nqg/symplectic.hpp"

#include <algorithm>

namespace nqg {

std::string Violation::describe() const {
  const std::string pair = "(g" + std::to_string(i + 1) + ", g" + std::to_string(j + 1) + ")";
  switch (condition) {
    case SymplecticCondition::pair_commutator:
      return "commutator of paired elements " + pair + " differs from [g1, g(1+r)]";
    case SymplecticCondition::commuting:
      return "elements " + pair + " do not commute";
    case SymplecticCondition::distinct:
      return "elements " + pair + " are equal";
  }
  return {};
}

std::variant<SymplecticSequence, Violation> check_symplectic(const FiniteGroup& g, std::span<const Element> seq) {
  for (Element x : seq) g.check(x);
  auto comm = [&](Element a, Element b) { return commutator(g, a, b); };
  auto is_id = [](Element x) { return x == kIdentity; };
  if (auto v = find_symplectic_violation<Element>(seq, comm, is_id)) return *v;
  SymplecticSequence s;
  s.group = &g;
  s.elements.assign(seq.begin(), seq.end());
  s.r = seq.size() / 2;
  s.c = comm(seq[0], seq[s.r]);
  s.nontrivial = s.c != kIdentity;
  return s;
}

std::variant<PermSymplectic, Violation> check_symplectic(std::span<const Perm> seq) {
  for (const auto& p : seq) {
    if (p.degree() != seq[0].degree()) throw InputError("permutations of different degree");
  }
  auto comm = [](const Perm& a, const Perm& b) { return commutator(a, b); };
  auto is_id = [](const Perm& x) { return x.is_identity(); };
  if (auto v = find_symplectic_violation<Perm>(seq, comm, is_id)) return *v;
  PermSymplectic s;
  s.elements.assign(seq.begin(), seq.end());
  s.r = seq.size() / 2;
  s.c = commutator(seq[0], seq[s.r]);
  s.nontrivial = !s.c.is_identity();
  return s;
}

SymplecticSequence canonical_form(const SymplecticSequence& seq) {
  const std::size_t r = seq.r;
  auto sorted_by_pairs = [r](const std::vector<Element>& e) {
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t i = 0; i < r; ++i) pairs.emplace_back(e[i], e[i + r]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<Element> out(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
      out[i] = pairs[i].first;
      out[i + r] = pairs[i].second;
    }
    return out;
  };
  std::vector<Element> swapped(seq.elements.size());
  for (std::size_t i = 0; i < r; ++i) {
    swapped[i] = seq.elements[i + r];
    swapped[i + r] = seq.elements[i];
  }
  auto a = sorted_by_pairs(seq.elements);
  auto b = sorted_by_pairs(swapped);
  SymplecticSequence out = seq;
  if (b < a) {
    out.elements = std::move(b);
    out.c = seq.group->inverse(seq.c);
  } else {
    out.elements = std::move(a);
  }
  return out;
}

namespace {

class Searcher {
 public:
  Searcher(const FiniteGroup& g, std::size_t r, std::uint64_t budget) : g_(g), r_(r), budget_(budget) {}

  // true = found; sets over_budget_ when the budget stopped the search
  bool run() {
    std::vector<Element> pool;
    for (Element x = 1; x < g_.order(); ++x) pool.push_back(x);
    return place(0, pool);
  }

  std::vector<Element> result() const {
    std::vector<Element> out(2 * r_);
    for (std::size_t i = 0; i < r_; ++i) {
      out[i] = xs_[i];
      out[i + r_] = ys_[i];
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool over_budget() const { return over_budget_; }

 private:
  bool commutes(Element a, Element b) const { return g_.multiply(a, b) == g_.multiply(b, a); }

  bool tick() {
    if (nodes_ >= budget_) {
      over_budget_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  // pool: non-identity elements commuting with every element placed so far
  bool place(std::size_t k, const std::vector<Element>& pool) {
    if (k == r_) return true;
    if (pool.size() < 2 * (r_ - k)) return false;
    for (Element x : pool) {
      if (k > 0 && x <= xs_[k - 1]) continue;
      if (!tick()) return false;
      xs_.push_back(x);
      for (Element y : pool) {
        if (y == x) continue;
        const Element cxy = commutator(g_, x, y);
        if (k == 0 ? cxy == kIdentity : cxy != c_) continue;
        if (!tick()) return false;
        if (k == 0) c_ = cxy;
        ys_.push_back(y);
        std::vector<Element> next;
        for (Element z : pool) {
          if (z != x && z != y && commutes(z, x) && commutes(z, y)) next.push_back(z);
        }
        if (place(k + 1, next)) return true;
        if (over_budget_) return false;
        ys_.pop_back();
      }
      xs_.pop_back();
    }
    return false;
  }

  const FiniteGroup& g_;
  std::size_t r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool over_budget_ = false;
  Element c_ = kIdentity;
  std::vector<Element> xs_, ys_;
};

}  // namespace

SearchResult find_symplectic(const FiniteGroup& g, std::size_t r, std::uint64_t budget) {
  if (budget == 0) throw InputError("search budget must be positive");
  if (r < 2) throw InputError("symplectic search needs r >= 2");
  Searcher s(g, r, budget);
  if (s.run()) {
    auto checked = check_symplectic(g, s.result());
    auto& seq = std::get<SymplecticSequence>(checked);
    return SearchFound{canonical_form(seq), s.nodes()};
  }
  if (s.over_budget()) return SearchBudgetExhausted{s.nodes()};
  return SearchExhaustedNone{s.nodes()};
}

Subgroup sequence_subgroup(const SymplecticSequence& seq) { return closure(*seq.group, seq.elements); }

StructureReport structure_report(const SymplecticSequence& seq) {
  const FiniteGroup& g = *seq.group;
  StructureReport rep;
  const Subgroup s = sequence_subgroup(seq);
  rep.subgroup_order = s.order();
  rep.c_order = g.element_order(seq.c);
  rep.derived_is_generated_by_c = derived_subgroup(s) == closure(g, {seq.c});
  rep.c_central = center(s).contains(seq.c);
  rep.c_commutes_with_sequence = std::all_of(seq.elements.begin(), seq.elements.end(), [&](Element x) {
    return g.multiply(x, seq.c) == g.multiply(seq.c, x);
  });
  if (s.order() <= 512) {
    bool ok = true;
    for (Element x : s.members) {
      for (Element y : s.members) {
        const Element xy = g.multiply(x, y);
        for (Element z : s.members) {
          if (commutator(g, xy, z) != g.multiply(commutator(g, x, z), commutator(g, y, z))) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.bilinear = ok;
  }
  return rep;
}

}  // namespace nqg
