#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nqg {

/// A permutation of {0, ..., degree-1} stored as its image list.
///
/// Composition follows the right-factor-first convention:
/// (a * b)(x) = a(b(x)).  Cycle notation on input and output is 1-based.
class Perm {
 public:
  using point_type = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<point_type> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Parses "(1 2 3)(4 5)" on `degree` points; "()" is the identity.
  static Perm from_cycles(std::string_view cycles, std::size_t degree);

  /// Largest point mentioned in a cycle string (1-based), 0 for "()".
  static std::size_t max_point(std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  point_type operator()(std::size_t x) const { return images_[x]; }
  std::span<const point_type> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_even() const;
  std::size_t order() const;

  /// Same permutation on `degree` points, fixing the added points.
  Perm extended(std::size_t degree) const;

  std::string to_cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<point_type> images_;
};

/// [a, b] = a b a^-1 b^-1.
Perm commutator(const Perm& a, const Perm& b);

}  // namespace nqg
