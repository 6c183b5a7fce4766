#pragma once

#include <map>
#include <sstream>
#include <string>

#include "nqg/constructions.hpp"
#include "nqg/group.hpp"
#include "nqg/perm.hpp"
#include "oracle.hpp"

namespace support {

inline nqg::Element perm_element(const nqg::FiniteGroup& g, const std::string& cycles) {
  const auto& backing = dynamic_cast<const nqg::PermBacking&>(g.backing());
  const nqg::Perm p = nqg::Perm::from_cycles(cycles, backing.degree());
  const nqg::Key key(p.images().begin(), p.images().end());
  return g.find(key).value();
}

// Multiplication-table file text for an oracle table whose identity is 0.
inline std::string table_text(const oracle::Table& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (const auto& row : t.mul) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

// The library group's own table, as an oracle table.
inline oracle::Table as_table(const nqg::FiniteGroup& g) {
  oracle::Table t;
  t.mul.assign(g.order(), std::vector<int>(g.order()));
  for (nqg::Element a = 0; a < g.order(); ++a) {
    for (nqg::Element b = 0; b < g.order(); ++b) t.mul[a][b] = static_cast<int>(g.multiply(a, b));
  }
  return t;
}

// Invariants that a hand-built oracle group and a library group must share.
struct Invariants {
  int order = 0;
  int derived = 0;
  int center = 0;
  int classes = 0;
  std::map<int, int> element_orders;  // order -> count
  bool operator==(const Invariants&) const = default;
};

inline Invariants invariants(const oracle::Table& t) {
  Invariants v;
  v.order = t.size();
  v.derived = static_cast<int>(oracle::derived(t).size());
  v.center = oracle::center_order(t);
  v.classes = oracle::class_count(t);
  for (int a = 0; a < t.size(); ++a) {
    int k = 1;
    for (int x = a; x != t.e; x = t(x, a)) ++k;
    ++v.element_orders[k];
  }
  return v;
}

}  // namespace support
