#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nqg/group.hpp"
#include "nqg/snf.hpp"

namespace nqg {

inline constexpr std::size_t kSimplexBudget = 200'000;
inline constexpr std::uint64_t kHomCountBudget = 100'000'000;

/// |Hom(Z^n, G)| for q = 2, and in general the number of n-tuples that
/// generate a subgroup of nilpotency class < q.  Backtracking over prefixes;
/// throws BudgetError after `budget` visited prefixes.
mpz_class hom_count(const FiniteGroup& g, std::size_t n, int q = 2, std::uint64_t budget = kHomCountBudget);

/// Normalized chains of B(q, G) up to dimension D.  basis[n] lists the
/// n-tuples without identity entries, lexicographically by id; boundary[n]
/// is the matrix of d: C_n -> C_{n-1} (rows C_{n-1}), for 1 <= n <= D.
/// C_0 is spanned by the empty tuple.
struct ChainComplex {
  int q = 2;
  std::size_t dimension = 0;
  std::vector<std::vector<std::vector<Element>>> basis;
  std::vector<IntMatrix> boundary;  // boundary[0] unused
};

ChainComplex build_complex(const FiniteGroup& g, int q, std::size_t dimension, std::size_t budget = kSimplexBudget);

/// Z^rank plus torsion.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
  std::string text() const;  // "Z^2 + Z/2 + Z/4", "0" when trivial
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_k(B(q, G); Z) for k in {0, 1, 2}.
HomologyGroup homology(const FiniteGroup& g, int q, int k, std::size_t budget = kSimplexBudget);
HomologyGroup homology(const ChainComplex& complex, int k);

/// Abelianization of the presentation of N_q(G), from its relator matrix.
HomologyGroup abelianized_presentation(const FiniteGroup& g, int q = 2);

struct H1Consistency {
  HomologyGroup from_presentation;
  HomologyGroup from_complex;
  bool agree = false;
};
H1Consistency h1_consistency(const FiniteGroup& g, std::size_t budget = kSimplexBudget);

}  // namespace nqg
