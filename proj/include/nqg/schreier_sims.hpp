#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "nqg/perm.hpp"

namespace nqg {

/// A permutation group held by a base and strong generating set.
///
/// Used for ambient groups that are too large to enumerate (e.g. the
/// symmetric group on 16 points): order and membership come from the
/// stabilizer chain, elements are never listed.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<std::size_t>& base() const { return base_; }

  mpz_class order() const;
  bool contains(const Perm& g) const;

 private:
  struct Level {
    std::size_t base_point = 0;
    std::vector<std::optional<Perm>> transversal;  // indexed by orbit point
    std::vector<std::size_t> orbit;
  };

  // Sifts g through levels >= `from`; returns the residue and the level at
  // which it dropped out (levels_.size() if it passed all levels).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void rebuild_level(std::size_t i);
  std::vector<Perm> level_generators(std::size_t i) const;
  void add_strong_generator(const Perm& h);

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<std::size_t> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace nqg
