#include "nqg/bqg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "nqg/coset_enum.hpp"
#include "nqg/error.hpp"
#include "nqg/group_ops.hpp"

namespace nqg {

namespace {

// Walks the tuples whose entries generate a subgroup of class < q.
class TupleWalker {
 public:
  TupleWalker(const FiniteGroup& g, int q, bool skip_identity, std::uint64_t budget)
      : g_(g), q_(q), skip_identity_(skip_identity), budget_(budget) {
    if (q < 2) throw InputError("q must be at least 2");
  }

  // visit(tuple) for every admissible n-tuple, in lexicographic id order
  template <class Visit>
  void walk(std::size_t n, Visit&& visit) {
    std::vector<Element> prefix;
    std::vector<Element> pool;
    for (Element x = skip_identity_ ? 1 : 0; x < g_.order(); ++x) pool.push_back(x);
    recurse(n, prefix, pool, visit);
  }

  // number of admissible n-tuples; q = 2 counts the last level from the pool
  mpz_class count(std::size_t n) {
    mpz_class total = 0;
    if (n == 0) return 1;
    if (q_ == 2) {
      std::vector<Element> pool;
      for (Element x = skip_identity_ ? 1 : 0; x < g_.order(); ++x) pool.push_back(x);
      count_commuting(n, pool, total);
    } else {
      walk(n, [&](const std::vector<Element>&) { total += 1; });
    }
    return total;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetError("tuple enumeration budget exceeded");
  }

  bool commutes(Element a, Element b) const { return g_.multiply(a, b) == g_.multiply(b, a); }

  void count_commuting(std::size_t n, const std::vector<Element>& pool, mpz_class& total) {
    if (n == 1) {
      total += static_cast<unsigned long>(pool.size());
      return;
    }
    for (Element x : pool) {
      tick();
      std::vector<Element> next;
      for (Element y : pool) {
        if (commutes(x, y)) next.push_back(y);
      }
      count_commuting(n - 1, next, total);
    }
  }

  bool admissible(const std::vector<Element>& tuple) {
    const Subgroup h = closure(g_, tuple);
    auto it = memo_.find(h.members);
    if (it == memo_.end()) {
      const auto c = nilpotency_class(h);
      it = memo_.emplace(h.members, c && *c < q_).first;
    }
    return it->second;
  }

  template <class Visit>
  void recurse(std::size_t n, std::vector<Element>& prefix, const std::vector<Element>& pool, Visit& visit) {
    if (prefix.size() == n) {
      visit(static_cast<const std::vector<Element>&>(prefix));
      return;
    }
    for (Element x : pool) {
      tick();
      prefix.push_back(x);
      if (q_ == 2) {
        std::vector<Element> next;
        for (Element y : pool) {
          if (commutes(x, y)) next.push_back(y);
        }
        recurse(n, prefix, next, visit);
      } else if (admissible(prefix)) {
        recurse(n, prefix, pool, visit);
      }
      prefix.pop_back();
    }
  }

  const FiniteGroup& g_;
  int q_;
  bool skip_identity_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::map<std::vector<Element>, bool> memo_;
};

std::uint64_t encode(const std::vector<Element>& t, std::uint64_t base) {
  std::uint64_t v = 0;
  for (Element x : t) v = v * base + x;
  return v;
}

HomologyGroup to_homology(std::size_t generators, const SNFResult& s) {
  HomologyGroup h;
  h.rank = generators - s.rank;
  h.torsion = s.torsion;
  return h;
}

}  // namespace

mpz_class hom_count(const FiniteGroup& g, std::size_t n, int q, std::uint64_t budget) {
  TupleWalker w(g, q, false, budget);
  return w.count(n);
}

ChainComplex build_complex(const FiniteGroup& g, int q, std::size_t dimension, std::size_t budget) {
  const std::uint64_t base = g.order();
  {
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), base, dimension);
    if (cap >= mpz_class("9223372036854775807")) throw InputError("complex dimension too large for this group");
  }
  ChainComplex cx;
  cx.q = q;
  cx.dimension = dimension;
  cx.basis.resize(dimension + 1);
  cx.boundary.resize(dimension + 1);
  cx.basis[0].push_back({});
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(dimension + 1);
  index[0][0] = 0;
  for (std::size_t n = 1; n <= dimension; ++n) {
    TupleWalker w(g, q, true, std::numeric_limits<std::uint64_t>::max());
    auto& cells = cx.basis[n];
    w.walk(n, [&](const std::vector<Element>& t) {
      if (cells.size() >= budget) {
        throw BudgetError("more than " + std::to_string(budget) + " nondegenerate " + std::to_string(n) + "-simplices");
      }
      index[n][encode(t, base)] = static_cast<std::uint32_t>(cells.size());
      cells.push_back(t);
    });
  }
  for (std::size_t n = 1; n <= dimension; ++n) {
    IntMatrix d(cx.basis[n - 1].size(), cx.basis[n].size());
    if (n >= 2) {
      std::vector<Element> face(n - 1);
      for (std::size_t s = 0; s < cx.basis[n].size(); ++s) {
        const auto& t = cx.basis[n][s];
        auto add_face = [&](int sign) {
          for (Element x : face) {
            if (x == kIdentity) return;
          }
          d.add(index[n - 1].at(encode(face, base)), s, sign);
        };
        std::copy(t.begin() + 1, t.end(), face.begin());
        add_face(1);
        for (std::size_t i = 1; i < n; ++i) {
          std::size_t k = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            face[k++] = j + 1 == i ? g.multiply(t[j], t[i]) : t[j];
          }
          add_face(i % 2 ? -1 : 1);
        }
        std::copy(t.begin(), t.end() - 1, face.begin());
        add_face(n % 2 ? -1 : 1);
      }
    }
    cx.boundary[n] = std::move(d);
  }
  return cx;
}

std::string HomologyGroup::text() const {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (rank == 1) append("Z");
  if (rank > 1) append("Z^" + std::to_string(rank));
  for (const auto& t : torsion) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

HomologyGroup homology(const ChainComplex& cx, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 > cx.dimension) {
    throw InputError("homology in degree " + std::to_string(k) + " needs the complex up to degree " +
                     std::to_string(k + 1));
  }
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t rank_in = kk == 0 ? 0 : smith(cx.boundary[kk]).rank;
  const SNFResult out = smith(cx.boundary[kk + 1]);
  HomologyGroup h;
  h.rank = cx.basis[kk].size() - rank_in - out.rank;
  h.torsion = out.torsion;
  return h;
}

HomologyGroup homology(const FiniteGroup& g, int q, int k, std::size_t budget) {
  if (k < 0 || k > 2) throw InputError("homology is computed in degrees 0, 1, 2");
  return homology(build_complex(g, q, static_cast<std::size_t>(k) + 1, budget), k);
}

HomologyGroup abelianized_presentation(const FiniteGroup& g, int q) {
  const Presentation p = build_presentation(g, q);
  IntMatrix m(p.relators.size(), p.num_generators());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int l : p.relators[i]) m.add(i, static_cast<std::size_t>(std::abs(l)) - 1, l > 0 ? 1 : -1);
  }
  return to_homology(p.num_generators(), smith(std::move(m)));
}

H1Consistency h1_consistency(const FiniteGroup& g, std::size_t budget) {
  H1Consistency out;
  out.from_presentation = abelianized_presentation(g, 2);
  out.from_complex = homology(g, 2, 1, budget);
  out.agree = out.from_presentation == out.from_complex;
  return out;
}

}  // namespace nqg
