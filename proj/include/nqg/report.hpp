#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nqg {

// Plain data mirror of the JSON report.  Optional members are omitted from
// the JSON when empty, so parse(render(r)) == r.

struct GroupSection {
  std::string spec;
  std::string order;  // decimal; may exceed 64 bits for ambient groups
  bool abelian = false;
  bool materialized = true;
  std::optional<std::uint64_t> conjugacy_classes;
  std::optional<bool> nilpotent;
  std::optional<int> nilpotency_class;
  bool operator==(const GroupSection&) const = default;
};

struct SequenceCertificate {
  std::vector<std::uint32_t> ids;  // empty for sequences in ambient groups
  std::vector<std::string> names;
  std::string c;
  std::uint64_t c_order = 0;
  bool nontrivial = false;
  bool operator==(const SequenceCertificate&) const = default;
};

struct ViolationInfo {
  std::uint64_t i = 0;  // 1-based positions
  std::uint64_t j = 0;
  std::string condition;
  std::string message;
  bool operator==(const ViolationInfo&) const = default;
};

struct StructureInfo {
  std::uint64_t subgroup_order = 0;
  std::uint64_t c_order = 0;
  bool derived_is_generated_by_c = false;
  bool c_central = false;
  bool c_commutes_with_sequence = false;
  std::optional<bool> bilinear;
  bool operator==(const StructureInfo&) const = default;
};

struct EmbeddingInfo {
  std::string source;  // e.g. gl:4:2
  std::uint64_t degree = 0;
  bool symplectic = false;
  bool even = false;
  bool in_ambient = false;
  bool operator==(const EmbeddingInfo&) const = default;
};

struct SymplecticSection {
  std::string mode;     // check | find
  std::string outcome;  // valid | violation | found | budget-exhausted | exhausted-none
  std::uint64_t r = 0;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> nodes;
  std::optional<SequenceCertificate> sequence;
  std::optional<ViolationInfo> violation;
  std::optional<StructureInfo> structure;
  std::optional<EmbeddingInfo> embedding;
  bool operator==(const SymplecticSection&) const = default;
};

struct D2Section {
  std::uint64_t order = 0;
  std::uint64_t derived_order = 0;
  std::optional<bool> antidiagonal_generation;
  std::optional<bool> projection_kernel;
  bool operator==(const D2Section&) const = default;
};

struct N2Section {
  std::string subject;  // group | sequence-subgroup
  int q = 2;
  std::string state;    // closed | limit-exceeded
  std::uint64_t coset_limit = 0;
  std::uint64_t coset_count = 0;
  std::uint64_t high_water = 0;
  std::uint64_t total_defined = 0;
  std::optional<std::uint64_t> kernel_order;
  std::optional<bool> kernel_is_torsion_free;
  std::optional<std::uint64_t> k_order;
  bool operator==(const N2Section&) const = default;
};

struct Theorem1Section {
  std::uint64_t s_order = 0;
  std::uint64_t d2_order = 0;
  std::uint64_t coset_count = 0;
  std::string state;
  std::optional<bool> epsilon_bar_well_defined;
  std::optional<bool> epsilon_bar_bijective;
  std::optional<bool> factorization;
  bool d2_inclusion = false;
  std::optional<bool> d2_inclusion_ambient;
  std::string verdict;  // PASS | FAIL | INCONCLUSIVE
  bool operator==(const Theorem1Section&) const = default;
};

struct LemmaSection {
  std::map<std::string, bool> checks;
  std::uint64_t k_order = 0;
  std::uint64_t kernel_order = 0;
  bool merge_exhaustive = true;
  std::uint64_t seed = 0;
  int exponent_min = 0;
  int exponent_max = 0;
  bool operator==(const LemmaSection&) const = default;
};

struct HomologyEntry {
  int q = 2;
  int degree = 0;
  std::uint64_t rank = 0;
  std::vector<std::string> torsion;  // decimal elementary divisors
  std::string text;
  bool operator==(const HomologyEntry&) const = default;
};

struct H1Section {
  HomologyEntry from_presentation;
  HomologyEntry from_complex;
  bool agree = false;
  bool operator==(const H1Section&) const = default;
};

struct HomCountSection {
  std::uint64_t n = 0;
  int q = 2;
  std::string count;
  bool operator==(const HomCountSection&) const = default;
};

struct ConjectureSection {
  int q = 2;
  std::optional<int> nilpotency_class;
  bool predicted_isomorphism = false;
  std::string state;
  std::uint64_t coset_count = 0;
  std::uint64_t high_water = 0;
  std::optional<bool> isomorphism;
  std::string agreement;
  bool operator==(const ConjectureSection&) const = default;
};

struct VerdictSection {
  std::string value;   // NOT_K_PI_1 | K_PI_1 | INCONCLUSIVE
  std::string reason;
  std::string search;  // skipped | found | budget-exhausted | exhausted-none
  std::uint64_t search_budget = 0;
  std::uint64_t search_nodes = 0;
  std::uint64_t coset_limit = 0;
  std::optional<std::string> enumeration;
  std::optional<std::uint64_t> coset_count;
  std::optional<std::uint64_t> high_water;
  std::optional<std::uint64_t> kernel_order;
  std::optional<std::vector<int>> torsion_witness;
  std::optional<std::uint64_t> torsion_order;
  bool operator==(const VerdictSection&) const = default;
};

struct AnalysisReport {
  static constexpr int kSchema = 1;
  std::string command;
  GroupSection group;
  std::optional<SymplecticSection> symplectic;
  std::optional<D2Section> d2;
  std::optional<N2Section> n2;
  std::optional<Theorem1Section> theorem1;
  std::optional<LemmaSection> lemmas;
  std::optional<std::map<std::string, bool>> omega;  // keyed by exponent n
  std::optional<std::map<std::string, bool>> image;  // sequence_image_in_n2
  std::vector<HomologyEntry> homology;
  std::optional<H1Section> h1_consistency;
  std::optional<HomCountSection> hom_count;
  std::optional<ConjectureSection> conjecture;
  std::optional<VerdictSection> verdict;  // JSON null when not evaluated
  bool operator==(const AnalysisReport&) const = default;
};

/// Deterministic JSON (sorted keys, two-space indent, trailing newline).
std::string render_json(const AnalysisReport& r);

/// Strict reader: requires schema 1 and rejects unknown or missing fields.
/// Throws InputError.
AnalysisReport parse_report(const std::string& json);

/// Human-readable summary.
std::string render_text(const AnalysisReport& r);

}  // namespace nqg
