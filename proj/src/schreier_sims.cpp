#include "nqg/schreier_sims.hpp"

#include "nqg/error.hpp"

namespace nqg {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InputError("generator degree mismatch");
    if (!g.is_identity()) add_strong_generator(g);
  }

  // Deterministic Schreier-Sims: verify Schreier generators level by level,
  // restarting from the deepest affected level whenever one fails to sift.
  std::size_t i = levels_.size();
  while (i > 0) {
    --i;
    rebuild_level(i);
    bool extended = false;
    const auto gens = level_generators(i);
    const auto& lvl = levels_[i];
    for (std::size_t idx = 0; !extended && idx < lvl.orbit.size(); ++idx) {
      const std::size_t x = lvl.orbit[idx];
      for (const auto& s : gens) {
        const std::size_t y = s(x);
        Perm schreier = lvl.transversal[y]->inverse() * s * *lvl.transversal[x];
        auto [residue, dropped] = strip(std::move(schreier), i + 1);
        if (dropped == levels_.size() && residue.is_identity()) continue;
        add_strong_generator(residue);
        for (std::size_t k = i + 1; k < levels_.size(); ++k) rebuild_level(k);
        i = levels_.size();
        extended = true;
        break;
      }
    }
  }
}

std::vector<Perm> PermGroup::level_generators(std::size_t i) const {
  std::vector<Perm> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t k = 0; k < i && fixes; ++k) fixes = s(base_[k]) == base_[k];
    if (fixes) out.push_back(s);
  }
  return out;
}

void PermGroup::add_strong_generator(const Perm& h) {
  bool fixes_base = true;
  for (auto b : base_) fixes_base = fixes_base && h(b) == b;
  if (fixes_base) {
    for (std::size_t x = 0; x < degree_; ++x) {
      if (h(x) != x) {
        base_.push_back(x);
        levels_.push_back(Level{x, {}, {}});
        break;
      }
    }
  }
  strong_.push_back(h);
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (levels_[k].transversal.empty()) rebuild_level(k);
  }
}

void PermGroup::rebuild_level(std::size_t i) {
  auto& lvl = levels_[i];
  lvl.transversal.assign(degree_, std::nullopt);
  lvl.orbit.clear();
  lvl.transversal[lvl.base_point] = Perm::identity(degree_);
  lvl.orbit.push_back(lvl.base_point);
  const auto gens = level_generators(i);
  for (std::size_t idx = 0; idx < lvl.orbit.size(); ++idx) {
    const std::size_t x = lvl.orbit[idx];
    for (const auto& s : gens) {
      const std::size_t y = s(x);
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = s * *lvl.transversal[x];
        lvl.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& lvl = levels_[i];
    const std::size_t beta = g(lvl.base_point);
    if (!lvl.transversal[beta]) return {std::move(g), i};
    g = lvl.transversal[beta]->inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

mpz_class PermGroup::order() const {
  mpz_class n = 1;
  for (const auto& lvl : levels_) n *= static_cast<unsigned long>(lvl.orbit.size());
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, dropped] = strip(g, 0);
  return dropped == levels_.size() && residue.is_identity();
}

}  // namespace nqg
