#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nqg/group.hpp"
#include "nqg/perm.hpp"
#include "nqg/schreier_sims.hpp"

namespace nqg {

enum class Family { cyclic, dihedral, quaternion, sym, alt, extraspecial, gl, product, perm, table };

/// Parsed group specification.  Grammar:
///   cyclic:n  dihedral:n  quaternion  sym:n  alt:n  extraspecial:p:r
///   gl:n:p  product:(spec),(spec)  perm:(cycles);(cycles);...  table:path
/// `dihedral:n` is the dihedral group of order n (n even).
struct GroupSpec {
  Family family = Family::cyclic;
  std::vector<long long> params;
  std::vector<GroupSpec> factors;     // product
  std::vector<std::string> cycles;    // perm generators, 1-based cycle notation
  std::string path;                   // table

  static GroupSpec parse(std::string_view text);
  std::string text() const;
};

/// Materializes the group.  Canonical generators:
///   cyclic: (1 .. n); dihedral: rotation, reflection; quaternion: i, j as
///   2x2 matrices over F_3; sym: (1 2), (1 .. n); alt: (1 2 3) and an n- or
///   (n-1)-cycle; extraspecial: the 2r lifted basis vectors of the Heisenberg
///   model; gl: all E_ij (i != j, lexicographic) then diag(w, 1, ..., 1).
/// Throws InputError on bad parameters, BudgetError above the order ceiling.
GroupPtr build(const GroupSpec& spec);
inline GroupPtr build(std::string_view spec) { return build(GroupSpec::parse(spec)); }

/// Exact order of the specified group without materializing it, when the
/// family allows it (everything except table and products thereof).
std::optional<mpz_class> spec_order(const GroupSpec& spec);

/// Stabilizer-chain view of permutation families (cyclic, dihedral, sym, alt,
/// perm); nullopt for other families.
std::optional<PermGroup> ambient_perm_group(const GroupSpec& spec);

bool is_prime(long long p);

/// The Heisenberg model of the extraspecial group of order p^(2r+1):
/// (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a.b'), realized as
/// (r+2) x (r+2) unitriangular matrices over F_p.
GroupPtr extraspecial(long long p, long long r);

/// Lifts (delta_i, 0, 0), (0, delta_i, 0) of the standard symplectic basis,
/// as ids in `group` (which must come from extraspecial(p, r)).
std::vector<Element> extraspecial_symplectic_basis(const FiniteGroup& group);

/// Key of (a, b, c) in the Heisenberg model.
Key heisenberg_key(long long p, std::span<const int> a, std::span<const int> b, int c);

GroupPtr general_linear(long long n, long long p);

/// Transvection I + e_ij (1-based i != j) as a matrix key.
Key elementary_matrix_key(std::size_t n, std::int32_t p, std::size_t i, std::size_t j);

/// E_ij inside a group built by general_linear.
Element elementary_matrix(const FiniteGroup& gl, std::size_t i, std::size_t j);

/// {E_12, E_13, E_2n, E_3n}; throws InputError for n < 4.
std::vector<Element> gl_symplectic_sequence(const FiniteGroup& gl);

/// Action of an n x n matrix over F_p on the p^n column vectors, vector v
/// numbered sum_i v_i p^(i-1).  Zero is point 0.
Perm matrix_action(KeyView matrix, std::size_t n, std::int32_t p);

/// The permutation image of every element of gl(n, p) acting on F_p^n.
struct PermEmbedding {
  std::size_t degree = 0;
  std::vector<Perm> images;  // indexed by source element id
};
PermEmbedding embed_gl_in_sym(const FiniteGroup& gl);

/// Group generated by permutations; ids canonical for these generators.
GroupPtr perm_group(const std::vector<Perm>& generators, std::size_t max_order = kMaxEnumeratedOrder);

}  // namespace nqg
