#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nqg/coset_enum.hpp"
#include "nqg/group.hpp"
#include "nqg/group_ops.hpp"
#include "nqg/symplectic.hpp"

namespace nqg {

/// Kernel of G x G -> G/[G,G], (x, y) -> xy[G,G].
struct D2Subgroup {
  const FiniteGroup* parent = nullptr;
  Subgroup derived;
  std::size_t order = 0;                              // |G| |[G,G]|
  std::vector<std::pair<Element, Element>> members;   // sorted; empty above kD2ExplicitLimit
  bool contains(Element x, Element y) const;
};

inline constexpr std::size_t kD2ExplicitLimit = std::size_t{1} << 10;

D2Subgroup d2(const FiniteGroup& g);

/// Closure of {(g, g^-1)} in G x G equals d2(G).  Needs |G| <= 2^10.
bool d2_antidiagonal_generation(const FiniteGroup& g);

/// The pairs of d2 with first coordinate 1 are exactly 1 x [G,G].
bool d2_projection_kernel(const D2Subgroup& d);

/// A group together with the presentation of N_q and its coset table.
struct Colimit {
  GroupPtr group;
  Presentation presentation;
  CosetTable table;
};

/// Builds and enumerates N_q(G).  The result is heap-allocated because the
/// table refers to the presentation.
std::unique_ptr<Colimit> enumerate_colimit(GroupPtr g, int q, std::size_t limit = kDefaultCosetLimit);

/// Image in G of the element of N_q(G) spelled by w.
Element epsilon(const Presentation& p, const Word& w);

/// Image in G x G of w under (g) -> (g, g^-1).
std::pair<Element, Element> epsilon_bar(const Presentation& p, const Word& w);

enum class Outcome { pass, fail, inconclusive };
std::string to_string(Outcome o);

struct Theorem1Report {
  std::size_t s_order = 0;
  std::size_t d2_order = 0;
  EnumerationState state = EnumerationState::in_progress;
  std::size_t coset_count = 0;
  std::size_t high_water = 0;
  std::optional<bool> epsilon_bar_well_defined;  // relators map to (1, 1)
  std::optional<bool> epsilon_bar_bijective;     // cosets -> D2(S) one-to-one and onto
  std::optional<bool> factorization;             // pi_1 of (g) -> (g, g^-1) is g
  bool d2_inclusion = false;                     // D2(S) inside D2(G) as pairs
  Outcome verdict = Outcome::inconclusive;
};

struct Theorem1Run {
  Theorem1Report report;
  std::unique_ptr<Colimit> n2;  // N_2(S), S re-enumerated as its own group
  SymplecticSequence sequence;  // the input sequence as ids of S
};

/// Enumerates N_2(S) for S = <seq> and compares with |D2(S)|.  Requires a
/// nontrivial sequence with r >= 2.
Theorem1Run theorem1_verify(const SymplecticSequence& seq, std::size_t limit = kDefaultCosetLimit);

/// The word k_i = (g_i g_{i+r})^-1 (g_i)(g_{i+r}) (0-based i).
Word k_word(const SymplecticSequence& seq, const Presentation& p, std::size_t i);

struct LemmaOptions {
  /// Exponents a, b, c, d for the commutator law; default [-|c|, |c|].
  std::optional<std::pair<int, int>> exponent_range;
  /// Merge identity is exhaustive on <g_i, g_{i+r}> up to this order.
  std::size_t exhaustive_merge_limit = 256;
  std::size_t merge_samples = 4096;
  std::uint64_t seed = 1;
};

struct LemmaReport {
  std::map<std::string, bool> checks;
  std::size_t k_order = 0;
  std::size_t kernel_order = 0;
  bool merge_exhaustive = true;
  std::uint64_t seed = 0;
  bool ok() const;
};

/// Traces the relations on k and the (g_i) through a closed table of
/// N_2(S), where S is the group of `seq`.
LemmaReport lemma_suite(const SymplecticSequence& seq, const CosetTable& t, const LemmaOptions& options = {});

struct ImageReport {
  bool symplectic = false;
  bool nontrivial = false;
};
ImageReport sequence_image_in_n2(const SymplecticSequence& seq, const CosetTable& t);

struct OmegaReport {
  bool well_defined = false;
  std::optional<bool> involutive;  // n = -1 only
  bool ok() const { return well_defined && involutive.value_or(true); }
};
/// (g) -> (g^n) on a closed table of N_q(G).
OmegaReport omega_check(const CosetTable& t, long long n);

struct KernelReport {
  EnumerationState state = EnumerationState::in_progress;
  std::optional<std::size_t> n2_order;
  std::optional<std::size_t> kernel_order;
  std::optional<bool> kernel_is_torsion_free;
  std::optional<std::size_t> k_order;
};
KernelReport epsilon_kernel(const FiniteGroup& g, const CosetTable& t, const SymplecticSequence* seq = nullptr);

enum class Verdict { not_k_pi_1, k_pi_1, inconclusive };
std::string to_string(Verdict v);

struct VerdictReport {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;        // abelian | symplectic-sequence | kernel-torsion | budgets-exhausted | kernel-trivial
  std::string search;        // skipped | found | budget-exhausted | exhausted-none
  std::uint64_t search_nodes = 0;
  std::uint64_t search_budget = 0;
  std::optional<SymplecticSequence> certificate;
  std::optional<EnumerationState> enumeration;
  std::size_t coset_limit = 0;
  std::size_t coset_count = 0;
  std::size_t high_water = 0;
  std::optional<std::size_t> kernel_order;
  std::optional<Word> torsion_witness;
  std::optional<std::size_t> torsion_order;
};

/// Abelian groups are K(pi,1); a nontrivial symplectic sequence (r = 2) or
/// torsion in ker(N_2(G) -> G) rules it out; otherwise inconclusive.
VerdictReport kpi1_verdict(GroupPtr g, std::uint64_t search_budget, std::size_t coset_limit);

enum class Agreement { agree, disagree, inconclusive };
std::string to_string(Agreement a);

struct ConjectureReport {
  int q = 2;
  std::optional<int> nilpotency_class;
  bool predicted_isomorphism = false;  // class < q
  EnumerationState state = EnumerationState::in_progress;
  std::size_t coset_count = 0;
  std::size_t high_water = 0;
  std::optional<bool> isomorphism;     // coset_count == |G|, when closed
  Agreement agreement = Agreement::inconclusive;
};
ConjectureReport conjecture_probe(GroupPtr g, int q, std::size_t coset_limit = kDefaultCosetLimit);

}  // namespace nqg
