#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "nqg/group.hpp"

namespace nqg {

/// A subgroup of a FiniteGroup, as a sorted member list plus generators.
/// Holds a non-owning reference to the parent, which must outlive it.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Element> members;  // sorted ascending
  std::vector<Element> generators;

  std::size_t order() const { return members.size(); }
  bool contains(Element g) const;
  bool is_trivial() const { return members.size() == 1; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// The whole group viewed as a subgroup of itself.
Subgroup whole(const FiniteGroup& g);

/// A set map between two groups, given by the image of every element.
struct MapTable {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<Element> images;
};

Subgroup closure(const FiniteGroup& g, std::span<const Element> gens);
Subgroup closure(const FiniteGroup& g, std::initializer_list<Element> gens);

/// A subgroup re-enumerated as a group in its own right (same backing,
/// canonical ids for its generator list), with the id translation both ways.
struct InducedGroup {
  const FiniteGroup* parent = nullptr;
  GroupPtr group;
  std::vector<Element> to_parent;  // indexed by id in `group`
  Element from_parent(Element g) const;
};
InducedGroup induced_group(const Subgroup& s);

/// Smallest subgroup of `h` containing `gens` that is normal in `h`.
Subgroup normal_closure(const Subgroup& h, std::span<const Element> gens);

/// g h g^-1 h^-1.
Element commutator(const FiniteGroup& g, Element a, Element b);

Subgroup derived_subgroup(const Subgroup& h);
inline Subgroup derived_subgroup(const FiniteGroup& g) { return derived_subgroup(whole(g)); }

Subgroup center(const Subgroup& h);
inline Subgroup center(const FiniteGroup& g) { return center(whole(g)); }

/// Gamma^1 = H, Gamma^{k+1} = [Gamma^k, H], listed until the series stabilizes.
std::vector<Subgroup> lower_central_series(const Subgroup& h);

/// Least c with Gamma^{c+1} = 1 (0 for the trivial group); nullopt when the
/// series stabilizes at a nontrivial subgroup.
std::optional<int> nilpotency_class(const Subgroup& h);
inline std::optional<int> nilpotency_class(const FiniteGroup& g) { return nilpotency_class(whole(g)); }

/// True iff <a, b> has nilpotency class < q.
bool pair_class_below(const FiniteGroup& g, Element a, Element b, int q);

/// Thread-safe memo of nilpotency_class(<a, b>) keyed by the unordered pair.
class PairClassCache {
 public:
  explicit PairClassCache(const FiniteGroup& g) : group_(&g) {}
  std::optional<int> get(Element a, Element b);
  bool below(Element a, Element b, int q);

 private:
  const FiniteGroup* group_;
  std::mutex mutex_;
  std::map<std::pair<Element, Element>, std::optional<int>> cache_;
};

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

struct Abelianization {
  GroupPtr quotient;
  MapTable map;  // source = the input group, target = quotient.get()
};
Abelianization abelianization(const FiniteGroup& g);

struct NilqResult {
  bool ok = true;
  std::optional<std::pair<Element, Element>> witness;  // first violating (g, h)
};

/// Checks phi(g) phi(h) = phi(gh) on every pair with class(<g, h>) < q.
NilqResult is_nilq_map(const MapTable& phi, int q);

}  // namespace nqg
