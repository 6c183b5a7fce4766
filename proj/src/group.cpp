#include "nqg/group.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "nqg/error.hpp"
#include "nqg/perm.hpp"

namespace nqg {

namespace {

constexpr std::size_t kCachedTableOrder = 1024;

std::uint64_t hash_key(KeyView k) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------- backings

Key PermBacking::identity() const {
  Key k(degree_);
  for (std::size_t i = 0; i < degree_; ++i) k[i] = static_cast<std::int32_t>(i);
  return k;
}

void PermBacking::multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const {
  for (std::size_t x = 0; x < degree_; ++x) out[x] = a[static_cast<std::size_t>(b[x])];
}

std::string PermBacking::name(KeyView key) const {
  std::vector<Perm::point_type> images(key.begin(), key.end());
  return Perm(std::move(images)).to_cycles();
}

Key MatrixBacking::identity() const {
  Key k(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) k[i * n_ + i] = 1;
  return k;
}

void MatrixBacking::multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += std::int64_t{a[i * n_ + k]} * b[k * n_ + j];
      out[i * n_ + j] = static_cast<std::int32_t>(s % p_);
    }
  }
}

std::string MatrixBacking::name(KeyView key) const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ' ';
      s += std::to_string(key[i * n_ + j]);
    }
  }
  return s + "]";
}

TableBacking::TableBacking(std::vector<std::vector<std::uint32_t>> table) : table_(std::move(table)) {}

void TableBacking::multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const {
  out[0] = static_cast<std::int32_t>(table_[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])]);
}

std::string TableBacking::name(KeyView key) const { return "t" + std::to_string(key[0]); }

Key ProductBacking::identity() const {
  Key k = left_->identity();
  Key r = right_->identity();
  k.insert(k.end(), r.begin(), r.end());
  return k;
}

void ProductBacking::multiply(KeyView a, KeyView b, std::span<std::int32_t> out) const {
  const std::size_t n = left_->key_size();
  left_->multiply(a.first(n), b.first(n), out.first(n));
  right_->multiply(a.subspan(n), b.subspan(n), out.subspan(n));
}

std::string ProductBacking::name(KeyView key) const {
  const std::size_t n = left_->key_size();
  return "(" + left_->name(key.first(n)) + ", " + right_->name(key.subspan(n)) + ")";
}

// ------------------------------------------------------------ FiniteGroup

KeyView FiniteGroup::key(Element g) const {
  return KeyView(keys_).subspan(std::size_t{g} * key_size_, key_size_);
}

std::optional<Element> FiniteGroup::find(KeyView k) const {
  if (k.size() != key_size_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_key(k) & mask;; s = (s + 1) & mask) {
    const Element e = slots_[s];
    if (e == static_cast<Element>(-1)) return std::nullopt;
    if (std::equal(k.begin(), k.end(), key(e).begin())) return e;
  }
}

void FiniteGroup::index_keys() {
  std::size_t cap = 16;
  while (cap < 2 * order_) cap <<= 1;
  slots_.assign(cap, static_cast<Element>(-1));
  for (Element e = 0; e < order_; ++e) place(e);
}

void FiniteGroup::place(Element e) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_key(key(e)) & mask;
  while (slots_[s] != static_cast<Element>(-1)) s = (s + 1) & mask;
  slots_[s] = e;
}

void FiniteGroup::insert_slot(Element e) {
  if (2 * (std::size_t{e} + 1) > slots_.size()) {
    index_keys();  // covers e, since order_ already counts it
  } else {
    place(e);
  }
}

Element FiniteGroup::lookup_product(Element a, Element b) const {
  Key out(key_size_);
  backing_->multiply(key(a), key(b), out);
  auto e = find(out);
  if (!e) throw std::logic_error("product left the enumerated group");
  return *e;
}

Element FiniteGroup::multiply(Element a, Element b) const {
  if (!table_.empty()) return table_[std::size_t{a} * order_ + b];
  return lookup_product(a, b);
}

void FiniteGroup::finish() {
  if (slots_.empty()) index_keys();
  if (order_ <= kCachedTableOrder) {
    table_.resize(order_ * order_);
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) table_[std::size_t{a} * order_ + b] = lookup_product(a, b);
    }
  }
  inverse_.assign(order_, kIdentity);
  std::vector<bool> done(order_, false);
  for (Element g = 0; g < order_; ++g) {
    if (done[g]) continue;
    // walk the cyclic subgroup: g^(k-1) is the inverse of g when g^k = 1
    Element prev = kIdentity;
    Element cur = g;
    while (cur != kIdentity) {
      prev = cur;
      cur = multiply(cur, g);
    }
    inverse_[g] = prev;
    inverse_[prev] = g;
    done[g] = done[prev] = true;
  }
}

GroupPtr FiniteGroup::generate(std::shared_ptr<const Backing> backing, const std::vector<Key>& generators,
                               std::size_t max_order) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->backing_ = std::move(backing);
  g->key_size_ = g->backing_->key_size();
  for (const auto& k : generators) {
    if (k.size() != g->key_size_) throw InputError("generator key has wrong length");
  }

  // Layered BFS; each new layer is sorted by key before numbering.
  const Key id = g->backing_->identity();
  g->keys_.assign(id.begin(), id.end());
  g->order_ = 1;
  g->index_keys();
  std::size_t layer_begin = 0;
  Key prod(g->key_size_);
  while (layer_begin < g->order_) {
    const std::size_t layer_end = g->order_;
    std::vector<Key> fresh;
    for (std::size_t e = layer_begin; e < layer_end; ++e) {
      for (const auto& s : generators) {
        g->backing_->multiply(g->key(static_cast<Element>(e)), s, prod);
        if (!g->find(prod)) fresh.push_back(prod);
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (g->order_ + fresh.size() > max_order) {
      throw BudgetError("group order exceeds enumeration ceiling of " + std::to_string(max_order));
    }
    for (const auto& k : fresh) {
      g->keys_.insert(g->keys_.end(), k.begin(), k.end());
      g->insert_slot(static_cast<Element>(g->order_++));
    }
    layer_begin = layer_end;
  }

  for (const auto& k : generators) g->generators_.push_back(*g->find(k));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> table) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  const std::size_t n = table.size();
  g->backing_ = std::make_shared<TableBacking>(std::move(table));
  g->key_size_ = 1;
  g->order_ = n;
  g->keys_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g->keys_[i] = static_cast<std::int32_t>(i);
  g->finish();
  // greedy generating set in index order
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<Element> members{kIdentity};
  for (Element x = 1; x < n; ++x) {
    if (in[x]) continue;
    g->generators_.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element s : g->generators_) {
        Element y = g->multiply(members[i], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return g;
}

Element FiniteGroup::power(Element g, long long n) const {
  Element base = n < 0 ? inverse(g) : g;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Element acc = kIdentity;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element cur = g; cur != kIdentity; cur = multiply(cur, g)) ++k;
  return k;
}

Element FiniteGroup::conjugate(Element g, Element by) const {
  return multiply(multiply(by, g), inverse(by));
}

std::string FiniteGroup::name(Element g) const { return backing_->name(key(g)); }

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (multiply(generators_[i], generators_[j]) != multiply(generators_[j], generators_[i])) return false;
    }
  }
  return true;
}

void FiniteGroup::check(Element g) const {
  if (!valid(g)) {
    throw InputError("element id " + std::to_string(g) + " out of range for group of order " +
                     std::to_string(order_));
  }
}

bool satisfies_group_axioms(const FiniteGroup& g, std::size_t exhaustive_limit) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.multiply(kIdentity, a) != a || g.multiply(a, kIdentity) != a) return false;
    if (g.multiply(g.inverse(a), a) != kIdentity || g.multiply(a, g.inverse(a)) != kIdentity) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) {
    return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
  };
  if (n <= exhaustive_limit && n <= 128) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int t = 0; t < 200000; ++t) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

GroupPtr parse_table(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw InputError("table: first token must be a positive order");
  if (n > 4096) throw BudgetError("table: order above 4096 is not supported");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::uint32_t>> t(un, std::vector<std::uint32_t>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      long long v;
      if (!(in >> v)) throw InputError("table: expected " + std::to_string(un * un) + " entries");
      if (v < 0 || v >= n) throw InputError("table: entry out of range");
      t[i][j] = static_cast<std::uint32_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw InputError("table: trailing data after " + std::to_string(un * un) + " entries");
  for (std::size_t i = 0; i < un; ++i) {
    if (t[0][i] != i || t[i][0] != i) throw InputError("table: id 0 is not the identity");
    std::vector<bool> row(un, false), col(un, false);
    for (std::size_t j = 0; j < un; ++j) {
      if (row[t[i][j]] || col[t[j][i]]) throw InputError("table: not a Latin square");
      row[t[i][j]] = col[t[j][i]] = true;
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return t[t[a][b]][c] == t[a][t[b][c]]; };
  if (un <= 512) {
    for (std::size_t a = 0; a < un; ++a)
      for (std::size_t b = 0; b < un; ++b)
        for (std::size_t c = 0; c < un; ++c)
          if (!assoc(a, b, c)) throw InputError("table: multiplication is not associative");
  } else {
    std::mt19937_64 rng(0x7ab1e);
    std::uniform_int_distribution<std::size_t> pick(0, un - 1);
    for (int s = 0; s < 1000000; ++s)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw InputError("table: multiplication is not associative");
  }
  return FiniteGroup::from_table(std::move(t));
}

GroupPtr load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read table file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table(ss.str());
}

}  // namespace nqg
