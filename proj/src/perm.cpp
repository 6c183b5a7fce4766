#include "nqg/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "nqg/error.hpp"

namespace nqg {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), point_type{0});
}

Perm::Perm(std::vector<point_type> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("image list is not a permutation");
    }
    seen[x] = true;
  }
}

namespace {

std::vector<std::vector<std::size_t>> parse_cycles(std::string_view s) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(s));
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i >= s.size()) throw InputError("unterminated cycle: " + std::string(s));
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw InputError("bad character in cycle notation: " + std::string(s));
      }
      std::size_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::size_t>(s[i] - '0');
        if (v > 65535) throw InputError("point out of range in cycle notation");
        ++i;
      }
      if (v == 0) throw InputError("cycle points are 1-based");
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

}  // namespace

std::size_t Perm::max_point(std::string_view cycles) {
  std::size_t m = 0;
  for (const auto& c : parse_cycles(cycles)) {
    for (auto v : c) m = std::max(m, v);
  }
  return m;
}

Perm Perm::from_cycles(std::string_view s, std::size_t degree) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : parse_cycles(s)) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t from = c[k] - 1;
      std::size_t to = c[(k + 1) % c.size()] - 1;
      if (from >= degree) throw InputError("cycle point exceeds degree");
      if (used[from]) throw InputError("point repeated in cycle notation");
      used[from] = true;
      p.images_[from] = static_cast<point_type>(to);
    }
  }
  return p;
}

Perm Perm::inverse() const {
  std::vector<point_type> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<point_type>(i);
  }
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size()) throw InputError("cannot shrink permutation degree");
  Perm r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InputError("permutation degree mismatch");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) r.images_[x] = a.images_[b.images_[x]];
  return r;
}

Perm commutator(const Perm& a, const Perm& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace nqg
