#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nqg {

/// Sparse integer matrix stored by rows; entries within a row are sorted by
/// column and nonzero.
struct IntMatrix {
  using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Row> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  /// Adds v to entry (i, j).
  void add(std::size_t i, std::size_t j, const mpz_class& v);
  mpz_class at(std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const;
};

/// Plain-text dump: "rows cols" then the dense matrix, one row per line.
void dump_matrix(const IntMatrix& m, std::ostream& out);

/// Product a * b.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SNFResult {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // elementary divisors > 1, each dividing the next
};

/// Smith normal form invariants.  Unit pivots are eliminated sparsely first;
/// the remainder is reduced densely, always pivoting on a smallest nonzero
/// entry.
SNFResult smith(IntMatrix m);

}  // namespace nqg
