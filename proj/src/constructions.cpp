#include "nqg/constructions.hpp"

#include <algorithm>
#include <charconv>

#include "nqg/error.hpp"

namespace nqg {

namespace {

long long parse_int(std::string_view s, std::string_view what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("bad integer '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Index one past the parenthesis matching s[open].
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  throw InputError("unbalanced parentheses in spec: " + std::string(s));
}

mpz_class factorial(long long n) {
  mpz_class f = 1;
  for (long long i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

void require_within_ceiling(const mpz_class& order, const std::string& what) {
  if (order > static_cast<unsigned long>(kMaxEnumeratedOrder)) {
    throw BudgetError(what + " has order " + order.get_str() + ", above the enumeration ceiling of " +
                      std::to_string(kMaxEnumeratedOrder));
  }
}

Key perm_key(const Perm& p) { return Key(p.images().begin(), p.images().end()); }

std::vector<Perm> family_perms(const GroupSpec& spec, std::size_t& degree) {
  const auto n = spec.params.empty() ? 0 : spec.params[0];
  std::vector<Perm> gens;
  auto cycle = [&](std::size_t from, std::size_t to) {  // (from from+1 ... to), 1-based
    std::string s = "(";
    for (std::size_t i = from; i <= to; ++i) s += std::to_string(i) + (i == to ? ")" : " ");
    return Perm::from_cycles(s, degree);
  };
  switch (spec.family) {
    case Family::cyclic:
      degree = static_cast<std::size_t>(n);
      if (n >= 2) gens.push_back(cycle(1, degree));
      break;
    case Family::dihedral: {
      const auto m = static_cast<std::size_t>(n / 2);
      if (m == 1) {
        degree = 2;
        gens.push_back(Perm::from_cycles("(1 2)", 2));
      } else if (m == 2) {
        degree = 4;
        gens.push_back(Perm::from_cycles("(1 2)", 4));
        gens.push_back(Perm::from_cycles("(3 4)", 4));
      } else {
        degree = m;
        gens.push_back(cycle(1, m));
        std::vector<Perm::point_type> refl(m);
        for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Perm::point_type>((m - i) % m);
        gens.emplace_back(std::move(refl));
      }
      break;
    }
    case Family::sym:
      degree = static_cast<std::size_t>(n);
      if (n >= 2) gens.push_back(cycle(1, 2));
      if (n >= 3) gens.push_back(cycle(1, degree));
      break;
    case Family::alt:
      degree = static_cast<std::size_t>(n);
      if (n >= 3) gens.push_back(cycle(1, 3));
      if (n >= 4) gens.push_back(n % 2 ? cycle(1, degree) : cycle(2, degree));
      break;
    case Family::perm: {
      degree = 1;
      for (const auto& c : spec.cycles) degree = std::max(degree, Perm::max_point(c));
      for (const auto& c : spec.cycles) gens.push_back(Perm::from_cycles(c, degree));
      break;
    }
    default:
      throw std::logic_error("not a permutation family");
  }
  return gens;
}

bool is_perm_family(Family f) {
  return f == Family::cyclic || f == Family::dihedral || f == Family::sym || f == Family::alt ||
         f == Family::perm;
}

void validate(const GroupSpec& spec) {
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw InputError(spec.text() + ": " + msg);
  };
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cyclic:
      need(p[0] >= 1 && p[0] <= 65535, "n must be in [1, 65535]");
      break;
    case Family::dihedral:
      need(p[0] >= 2 && p[0] % 2 == 0 && p[0] <= 131070, "order must be even, >= 2");
      break;
    case Family::sym:
    case Family::alt:
      need(p[0] >= 1 && p[0] <= 65535, "n must be in [1, 65535]");
      break;
    case Family::extraspecial:
      need(is_prime(p[0]), "p must be prime");
      need(p[1] >= 1 && p[1] <= 64, "r must be in [1, 64]");
      break;
    case Family::gl:
      need(p[0] >= 1 && p[0] <= 64, "n must be in [1, 64]");
      need(is_prime(p[1]), "p must be prime");
      break;
    default:
      break;
  }
}

}  // namespace

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  GroupSpec s;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto ints = [&](std::size_t count) {
    auto parts = split(rest, ':');
    if (rest.empty() || parts.size() != count) {
      throw InputError("spec '" + std::string(text) + "' needs " + std::to_string(count) + " parameter(s)");
    }
    for (auto part : parts) s.params.push_back(parse_int(part, text));
  };
  if (head == "cyclic") {
    s.family = Family::cyclic;
    ints(1);
  } else if (head == "dihedral") {
    s.family = Family::dihedral;
    ints(1);
  } else if (head == "quaternion") {
    s.family = Family::quaternion;
    if (!rest.empty() || colon != std::string_view::npos) throw InputError("quaternion takes no parameters");
  } else if (head == "sym") {
    s.family = Family::sym;
    ints(1);
  } else if (head == "alt") {
    s.family = Family::alt;
    ints(1);
  } else if (head == "extraspecial") {
    s.family = Family::extraspecial;
    ints(2);
  } else if (head == "gl") {
    s.family = Family::gl;
    ints(2);
  } else if (head == "product") {
    s.family = Family::product;
    if (rest.empty() || rest[0] != '(') throw InputError("product needs (spec),(spec)");
    const auto end1 = match_paren(rest, 0);
    if (end1 + 1 >= rest.size() || rest[end1] != ',' || rest[end1 + 1] != '(') {
      throw InputError("product needs (spec),(spec)");
    }
    const auto end2 = match_paren(rest, end1 + 1);
    if (end2 != rest.size()) throw InputError("trailing text after product factors");
    s.factors.push_back(parse(rest.substr(1, end1 - 2)));
    s.factors.push_back(parse(rest.substr(end1 + 2, end2 - end1 - 3)));
  } else if (head == "perm") {
    s.family = Family::perm;
    if (rest.empty()) throw InputError("perm needs at least one generator");
    for (auto part : split(rest, ';')) {
      Perm::max_point(part);  // syntax check
      s.cycles.emplace_back(part);
    }
  } else if (head == "table") {
    s.family = Family::table;
    if (rest.empty()) throw InputError("table needs a path");
    s.path = std::string(rest);
  } else {
    throw InputError("unknown group family '" + std::string(head) + "'");
  }
  validate(s);
  return s;
}

std::string GroupSpec::text() const {
  auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::cyclic: return "cyclic:" + p(0);
    case Family::dihedral: return "dihedral:" + p(0);
    case Family::quaternion: return "quaternion";
    case Family::sym: return "sym:" + p(0);
    case Family::alt: return "alt:" + p(0);
    case Family::extraspecial: return "extraspecial:" + p(0) + ":" + p(1);
    case Family::gl: return "gl:" + p(0) + ":" + p(1);
    case Family::product: return "product:(" + factors[0].text() + "),(" + factors[1].text() + ")";
    case Family::perm: {
      std::string s = "perm:";
      for (std::size_t i = 0; i < cycles.size(); ++i) s += (i ? ";" : "") + cycles[i];
      return s;
    }
    case Family::table: return "table:" + path;
  }
  return {};
}

std::optional<mpz_class> spec_order(const GroupSpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cyclic:
    case Family::dihedral:
      return mpz_class(static_cast<unsigned long>(p[0]));
    case Family::quaternion:
      return mpz_class(8);
    case Family::sym:
      return factorial(p[0]);
    case Family::alt:
      return p[0] <= 1 ? mpz_class(1) : mpz_class(factorial(p[0]) / 2);
    case Family::extraspecial: {
      mpz_class o;
      mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(p[0]), static_cast<unsigned long>(2 * p[1] + 1));
      return o;
    }
    case Family::gl: {
      mpz_class q, o = 1, pi = 1;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p[1]), static_cast<unsigned long>(p[0]));
      for (long long i = 0; i < p[0]; ++i) {
        o *= q - pi;
        pi *= static_cast<unsigned long>(p[1]);
      }
      return o;
    }
    case Family::product: {
      auto a = spec_order(spec.factors[0]);
      auto b = spec_order(spec.factors[1]);
      if (!a || !b) return std::nullopt;
      return mpz_class(*a * *b);
    }
    case Family::perm:
      return ambient_perm_group(spec)->order();
    case Family::table:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<PermGroup> ambient_perm_group(const GroupSpec& spec) {
  if (!is_perm_family(spec.family)) return std::nullopt;
  std::size_t degree = 0;
  auto gens = family_perms(spec, degree);
  return PermGroup(degree, std::move(gens));
}

GroupPtr perm_group(const std::vector<Perm>& generators, std::size_t max_order) {
  if (generators.empty()) throw InputError("perm_group needs at least one generator");
  std::vector<Key> keys;
  for (const auto& g : generators) keys.push_back(perm_key(g));
  return FiniteGroup::generate(std::make_shared<PermBacking>(generators[0].degree()), keys, max_order);
}

GroupPtr build(const GroupSpec& spec) {
  if (auto order = spec_order(spec)) require_within_ceiling(*order, spec.text());
  switch (spec.family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::sym:
    case Family::alt:
    case Family::perm: {
      std::size_t degree = 0;
      auto gens = family_perms(spec, degree);
      std::vector<Key> keys;
      for (const auto& g : gens) keys.push_back(perm_key(g));
      return FiniteGroup::generate(std::make_shared<PermBacking>(std::max<std::size_t>(degree, 1)), keys);
    }
    case Family::quaternion: {
      auto backing = std::make_shared<MatrixBacking>(2, 3);
      return FiniteGroup::generate(backing, {Key{0, 2, 1, 0}, Key{1, 1, 1, 2}});
    }
    case Family::extraspecial:
      return extraspecial(spec.params[0], spec.params[1]);
    case Family::gl:
      return general_linear(spec.params[0], spec.params[1]);
    case Family::product: {
      auto a = build(spec.factors[0]);
      auto b = build(spec.factors[1]);
      if (a->order() * b->order() > kMaxEnumeratedOrder) throw BudgetError(spec.text() + ": product too large");
      auto backing = std::make_shared<ProductBacking>(a->backing_ptr(), b->backing_ptr());
      const Key ida = a->backing().identity();
      const Key idb = b->backing().identity();
      std::vector<Key> gens;
      for (Element g : a->generators()) {
        Key k(a->key(g).begin(), a->key(g).end());
        k.insert(k.end(), idb.begin(), idb.end());
        gens.push_back(std::move(k));
      }
      for (Element g : b->generators()) {
        Key k = ida;
        k.insert(k.end(), b->key(g).begin(), b->key(g).end());
        gens.push_back(std::move(k));
      }
      return FiniteGroup::generate(backing, gens);
    }
    case Family::table:
      return load_table(spec.path);
  }
  throw std::logic_error("unhandled family");
}

Key heisenberg_key(long long p, std::span<const int> a, std::span<const int> b, int c) {
  const std::size_t r = a.size();
  const std::size_t n = r + 2;
  Key k(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) k[i * n + i] = 1;
  auto mod = [&](long long v) { return static_cast<std::int32_t>(((v % p) + p) % p); };
  for (std::size_t i = 0; i < r; ++i) {
    k[0 * n + (i + 1)] = mod(a[i]);
    k[(i + 1) * n + (n - 1)] = mod(b[i]);
  }
  k[0 * n + (n - 1)] = mod(c);
  return k;
}

GroupPtr extraspecial(long long p, long long r) {
  GroupSpec spec;
  spec.family = Family::extraspecial;
  spec.params = {p, r};
  validate(spec);
  require_within_ceiling(*spec_order(spec), spec.text());
  const auto ur = static_cast<std::size_t>(r);
  std::vector<Key> gens;
  std::vector<int> zero(ur, 0);
  for (std::size_t i = 0; i < ur; ++i) {
    std::vector<int> delta(ur, 0);
    delta[i] = 1;
    gens.push_back(heisenberg_key(p, delta, zero, 0));
  }
  for (std::size_t i = 0; i < ur; ++i) {
    std::vector<int> delta(ur, 0);
    delta[i] = 1;
    gens.push_back(heisenberg_key(p, zero, delta, 0));
  }
  return FiniteGroup::generate(std::make_shared<MatrixBacking>(ur + 2, static_cast<std::int32_t>(p)), gens);
}

std::vector<Element> extraspecial_symplectic_basis(const FiniteGroup& group) {
  const auto* m = dynamic_cast<const MatrixBacking*>(&group.backing());
  if (!m || m->dimension() < 3) throw InputError("not an extraspecial (Heisenberg) group");
  const std::size_t r = m->dimension() - 2;
  std::vector<Element> basis;
  std::vector<int> zero(r, 0);
  for (int half = 0; half < 2; ++half) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> delta(r, 0);
      delta[i] = 1;
      const Key k = half == 0 ? heisenberg_key(m->prime(), delta, zero, 0) : heisenberg_key(m->prime(), zero, delta, 0);
      auto e = group.find(k);
      if (!e) throw InputError("not an extraspecial (Heisenberg) group");
      basis.push_back(*e);
    }
  }
  return basis;
}

Key elementary_matrix_key(std::size_t n, std::int32_t p, std::size_t i, std::size_t j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw InputError("elementary matrix needs 1 <= i != j <= n");
  Key k(n * n, 0);
  for (std::size_t d = 0; d < n; ++d) k[d * n + d] = 1;
  k[(i - 1) * n + (j - 1)] = 1 % p;
  return k;
}

GroupPtr general_linear(long long n, long long p) {
  GroupSpec spec;
  spec.family = Family::gl;
  spec.params = {n, p};
  validate(spec);
  require_within_ceiling(*spec_order(spec), spec.text());
  const auto un = static_cast<std::size_t>(n);
  const auto ip = static_cast<std::int32_t>(p);
  std::vector<Key> gens;
  for (std::size_t i = 1; i <= un; ++i)
    for (std::size_t j = 1; j <= un; ++j)
      if (i != j) gens.push_back(elementary_matrix_key(un, ip, i, j));
  // primitive root of F_p
  std::int32_t w = 1;
  for (std::int32_t cand = 1; cand < ip; ++cand) {
    std::int32_t x = 1;
    std::int32_t ord = 0;
    do {
      x = static_cast<std::int32_t>((std::int64_t{x} * cand) % ip);
      ++ord;
    } while (x != 1);
    if (ord == ip - 1) {
      w = cand;
      break;
    }
  }
  if (w != 1 || gens.empty()) {
    Key d(un * un, 0);
    for (std::size_t i = 0; i < un; ++i) d[i * un + i] = 1;
    d[0] = w;
    gens.push_back(std::move(d));
  }
  return FiniteGroup::generate(std::make_shared<MatrixBacking>(un, ip), gens);
}

Element elementary_matrix(const FiniteGroup& gl, std::size_t i, std::size_t j) {
  const auto* m = dynamic_cast<const MatrixBacking*>(&gl.backing());
  if (!m) throw InputError("not a matrix group");
  auto e = gl.find(elementary_matrix_key(m->dimension(), m->prime(), i, j));
  if (!e) throw InputError("elementary matrix not in group");
  return *e;
}

std::vector<Element> gl_symplectic_sequence(const FiniteGroup& gl) {
  const auto* m = dynamic_cast<const MatrixBacking*>(&gl.backing());
  if (!m) throw InputError("not a matrix group");
  const std::size_t n = m->dimension();
  if (n < 4) throw InputError("the elementary-matrix symplectic sequence needs n >= 4");
  return {elementary_matrix(gl, 1, 2), elementary_matrix(gl, 1, 3), elementary_matrix(gl, 2, n),
          elementary_matrix(gl, 3, n)};
}

Perm matrix_action(KeyView matrix, std::size_t n, std::int32_t p) {
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= static_cast<std::size_t>(p);
    if (points > 65536) throw BudgetError("p^n exceeds 2^16 points");
  }
  std::vector<Perm::point_type> images(points);
  std::vector<std::int32_t> v(n), w(n);
  for (std::size_t idx = 0; idx < points; ++idx) {
    std::size_t t = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::int32_t>(t % static_cast<std::size_t>(p));
      t /= static_cast<std::size_t>(p);
    }
    std::size_t out = 0;
    std::size_t scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += std::int64_t{matrix[i * n + k]} * v[k];
      out += static_cast<std::size_t>(s % p) * scale;
      scale *= static_cast<std::size_t>(p);
    }
    images[idx] = static_cast<Perm::point_type>(out);
  }
  return Perm(std::move(images));
}

PermEmbedding embed_gl_in_sym(const FiniteGroup& gl) {
  const auto* m = dynamic_cast<const MatrixBacking*>(&gl.backing());
  if (!m) throw InputError("not a matrix group");
  PermEmbedding emb;
  emb.images.reserve(gl.order());
  for (Element g = 0; g < gl.order(); ++g) emb.images.push_back(matrix_action(gl.key(g), m->dimension(), m->prime()));
  emb.degree = emb.images.empty() ? 0 : emb.images[0].degree();
  return emb;
}

}  // namespace nqg
