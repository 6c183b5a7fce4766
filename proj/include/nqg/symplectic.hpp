#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nqg/group.hpp"
#include "nqg/group_ops.hpp"
#include "nqg/error.hpp"
#include "nqg/perm.hpp"

namespace nqg {

/// Which defining condition a candidate sequence broke.
enum class SymplecticCondition {
  pair_commutator,  // [g_i, g_{i+r}] differs from [g_1, g_{1+r}]
  commuting,        // [g_i, g_j] != 1 for |i - j| != r
  distinct,         // repeated entry
};

struct Violation {
  std::size_t i = 0;  // 0-based positions of the failing pair
  std::size_t j = 0;
  SymplecticCondition condition = SymplecticCondition::commuting;
  std::string describe() const;
};

/// A certified symplectic sequence g_1..g_{2r}: [g_i, g_{i+r}] = c for all
/// i <= r and every other pair commutes.
struct SymplecticSequence {
  const FiniteGroup* group = nullptr;
  std::vector<Element> elements;
  std::size_t r = 0;
  Element c = kIdentity;
  bool nontrivial = false;
};

/// Checks the conditions on any element type given a commutator and an
/// identity test.  Throws InputError on odd/short length or an identity
/// entry; returns the first violation in (i, j) order, or nullopt.
template <class T, class Comm, class IsIdentity>
std::optional<Violation> find_symplectic_violation(std::span<const T> seq, Comm comm, IsIdentity is_identity);

std::variant<SymplecticSequence, Violation> check_symplectic(const FiniteGroup& g, std::span<const Element> seq);

/// Permutation-level certificate, for ambient groups that are never enumerated.
struct PermSymplectic {
  std::vector<Perm> elements;
  std::size_t r = 0;
  Perm c;
  bool nontrivial = false;
};
std::variant<PermSymplectic, Violation> check_symplectic(std::span<const Perm> seq);

/// Least representative under reordering of the r pairs and the global swap
/// g_i <-> g_{i+r}; the swap replaces c by c^-1.
SymplecticSequence canonical_form(const SymplecticSequence& seq);

struct SearchFound {
  SymplecticSequence sequence;
  std::uint64_t nodes = 0;
};
struct SearchBudgetExhausted {
  std::uint64_t nodes = 0;
};
struct SearchExhaustedNone {
  std::uint64_t nodes = 0;
};
using SearchResult = std::variant<SearchFound, SearchBudgetExhausted, SearchExhaustedNone>;

/// Depth-first search for a nontrivial sequence with the given r (>= 2),
/// expanding at most `budget` nodes.  Pairs are placed in increasing order
/// of their first element, so each sequence is visited once up to pair
/// reordering; the result is returned in canonical form.
SearchResult find_symplectic(const FiniteGroup& g, std::size_t r, std::uint64_t budget);

Subgroup sequence_subgroup(const SymplecticSequence& seq);

struct StructureReport {
  std::size_t subgroup_order = 0;
  std::size_t c_order = 0;
  bool derived_is_generated_by_c = false;
  bool c_central = false;
  bool c_commutes_with_sequence = false;
  std::optional<bool> bilinear;  // nullopt when |S| > 512 (not checked)
  bool ok() const {
    return derived_is_generated_by_c && c_central && c_commutes_with_sequence && bilinear.value_or(true);
  }
};
StructureReport structure_report(const SymplecticSequence& seq);

// ------------------------------------------------------------------------

template <class T, class Comm, class IsIdentity>
std::optional<Violation> find_symplectic_violation(std::span<const T> seq, Comm comm, IsIdentity is_identity) {
  if (seq.size() < 2 || seq.size() % 2 != 0) {
    throw InputError("a symplectic sequence needs an even number (>= 2) of elements");
  }
  for (const auto& x : seq) {
    if (is_identity(x)) throw InputError("symplectic sequences contain no identity element");
  }
  const std::size_t r = seq.size() / 2;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return Violation{i, j, SymplecticCondition::distinct};
    }
  }
  const auto c = comm(seq[0], seq[r]);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (j - i == r) {
        if (!(comm(seq[i], seq[j]) == c)) return Violation{i, j, SymplecticCondition::pair_commutator};
      } else if (!is_identity(comm(seq[i], seq[j]))) {
        return Violation{i, j, SymplecticCondition::commuting};
      }
    }
  }
  return std::nullopt;
}

}  // namespace nqg
