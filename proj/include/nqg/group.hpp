#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nqg {

/// Index into a group's canonical element order; 0 is always the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Groups materializing every element refuse to grow past this order.
inline constexpr std::size_t kMaxEnumeratedOrder = std::size_t{1} << 20;

/// Elements of a backed group are fixed-length integer keys.
using Key = std::vector<std::int32_t>;
using KeyView = std::span<const std::int32_t>;

enum class BackingKind { permutation, matrix, table, product };

/// Arithmetic on the concrete representation behind a FiniteGroup.
/// Keys compare lexicographically; that order breaks ties in the canonical
/// element numbering.
class Backing {
 public:
  virtual ~Backing() = default;
  virtual BackingKind kind() const = 0;
  virtual std::size_t key_size() const = 0;
  virtual Key identity() const = 0;
  virtual void multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const = 0;
  virtual std::string name(KeyView key) const = 0;
};

/// Permutations of {0..degree-1}; key = image list.
class PermBacking final : public Backing {
 public:
  explicit PermBacking(std::size_t degree) : degree_(degree) {}
  BackingKind kind() const override { return BackingKind::permutation; }
  std::size_t key_size() const override { return degree_; }
  Key identity() const override;
  void multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const override;
  std::string name(KeyView key) const override;
  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};

/// n x n matrices over F_p; key = row-major entries in [0, p).
class MatrixBacking final : public Backing {
 public:
  MatrixBacking(std::size_t n, std::int32_t p) : n_(n), p_(p) {}
  BackingKind kind() const override { return BackingKind::matrix; }
  std::size_t key_size() const override { return n_ * n_; }
  Key identity() const override;
  void multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const override;
  std::string name(KeyView key) const override;
  std::size_t dimension() const { return n_; }
  std::int32_t prime() const { return p_; }

 private:
  std::size_t n_;
  std::int32_t p_;
};

/// Explicit multiplication table; key = row index, 0 is the identity.
class TableBacking final : public Backing {
 public:
  explicit TableBacking(std::vector<std::vector<std::uint32_t>> table);
  BackingKind kind() const override { return BackingKind::table; }
  std::size_t key_size() const override { return 1; }
  Key identity() const override { return {0}; }
  void multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const override;
  std::string name(KeyView key) const override;
  std::size_t size() const { return table_.size(); }

 private:
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Direct product; key = left key followed by right key.
class ProductBacking final : public Backing {
 public:
  ProductBacking(std::shared_ptr<const Backing> left, std::shared_ptr<const Backing> right)
      : left_(std::move(left)), right_(std::move(right)) {}
  BackingKind kind() const override { return BackingKind::product; }
  std::size_t key_size() const override { return left_->key_size() + right_->key_size(); }
  Key identity() const override;
  void multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const override;
  std::string name(KeyView key) const override;

 private:
  std::shared_ptr<const Backing> left_;
  std::shared_ptr<const Backing> right_;
};

/// A concrete finite group with every element enumerated.
///
/// Elements are numbered in breadth-first order from the identity over the
/// generator list (right multiplication), each layer sorted by key.  Groups
/// are immutable once built; small ones cache a full Cayley table.
class FiniteGroup {
 public:
  /// Enumerates the group generated by `generators`.  Throws BudgetError
  /// when the order would exceed `max_order`.
  static std::shared_ptr<const FiniteGroup> generate(std::shared_ptr<const Backing> backing,
                                                     const std::vector<Key>& generators,
                                                     std::size_t max_order = kMaxEnumeratedOrder);

  /// Table-backed group whose ids are the table's own row indices.
  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<std::uint32_t>> table);

  std::size_t order() const { return order_; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element g) const { return inverse_[g]; }
  Element power(Element g, long long n) const;
  std::size_t element_order(Element g) const;
  Element conjugate(Element g, Element by) const;  // by g by^-1

  std::span<const Element> generators() const { return generators_; }
  KeyView key(Element g) const;
  std::optional<Element> find(KeyView key) const;
  std::string name(Element g) const;
  const Backing& backing() const { return *backing_; }
  std::shared_ptr<const Backing> backing_ptr() const { return backing_; }

  bool is_abelian() const;
  bool valid(Element g) const { return g < order_; }
  /// Throws InputError unless g is a valid id.
  void check(Element g) const;

 private:
  FiniteGroup() = default;
  void index_keys();
  void place(Element e);
  void insert_slot(Element e);
  void finish();
  Element lookup_product(Element a, Element b) const;

  std::shared_ptr<const Backing> backing_;
  std::size_t key_size_ = 0;
  std::size_t order_ = 0;
  std::vector<std::int32_t> keys_;  // order_ * key_size_, flattened
  std::vector<Element> slots_;      // open-addressing index into keys_
  std::vector<Element> inverse_;
  std::vector<Element> table_;      // order_^2 when cached, else empty
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Exhaustive check of identity, inverse and associativity; associativity is
/// sampled (fixed seed) above `exhaustive_limit`.
bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit = 1000);

/// Parses the multiplication-table file format: first token n, then n*n ids
/// (row g, column h holds g*h).  Validates identity, Latin-square shape and,
/// for n <= 512, associativity.
GroupPtr load_table(const std::string& path);
GroupPtr parse_table(const std::string& text);

}  // namespace nqg
