#include "nqg/snf.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace nqg {

void IntMatrix::add(std::size_t i, std::size_t j, const mpz_class& v) {
  if (v == 0) return;
  Row& row = data[i];
  const auto col = static_cast<std::uint32_t>(j);
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {col, v});
  }
}

mpz_class IntMatrix::at(std::size_t i, std::size_t j) const {
  const Row& row = data[i];
  const auto col = static_cast<std::uint32_t>(j);
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? it->second : mpz_class(0);
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Row& r : data) n += r.size();
  return n;
}

void dump_matrix(const IntMatrix& m, std::ostream& out) {
  out << m.rows << ' ' << m.cols << '\n';
  for (const auto& row : m.data) {
    auto it = row.begin();
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out << ' ';
      if (it != row.end() && it->first == j) {
        out << it->second.get_str();
        ++it;
      } else {
        out << '0';
      }
    }
    out << '\n';
  }
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (const auto& [k, v] : a.data[i]) {
      for (const auto& [j, w] : b.data[k]) c.add(i, j, v * w);
    }
  }
  return c;
}

namespace {

using Row = IntMatrix::Row;

// row_a += f * row_b
void axpy(Row& a, const mpz_class& f, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, f * j->second);
      ++j;
    } else {
      mpz_class v = i->second + f * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

// Eliminates +-1 pivots; returns their count and leaves the rest in `m`.
std::size_t eliminate_units(IntMatrix& m) {
  std::vector<std::set<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    for (const auto& [j, v] : m.data[i]) col_rows[j].insert(i);
  }
  std::vector<bool> row_done(m.rows, false);
  std::size_t rank = 0;
  // Sweep repeatedly; prefer short rows and short columns to limit fill-in.
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < m.rows; ++i) {
      if (!row_done[i] && !m.data[i].empty()) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return m.data[a].size() < m.data[b].size(); });
    for (std::uint32_t i : order) {
      if (row_done[i]) continue;
      const Row& row = m.data[i];
      std::uint32_t best = 0;
      std::size_t best_len = 0;
      bool found = false;
      for (const auto& [j, v] : row) {
        if (abs(v) == 1 && (!found || col_rows[j].size() < best_len)) {
          best = j;
          best_len = col_rows[j].size();
          found = true;
        }
      }
      if (!found) continue;
      const mpz_class pivot = m.at(i, best);
      const Row pivot_row = m.data[i];
      const std::vector<std::uint32_t> targets(col_rows[best].begin(), col_rows[best].end());
      for (std::uint32_t k : targets) {
        if (k == i) continue;
        const mpz_class f = -m.at(k, best) * pivot;  // pivot is its own inverse
        for (const auto& e : m.data[k]) col_rows[e.first].erase(k);
        axpy(m.data[k], f, pivot_row);
        for (const auto& e : m.data[k]) col_rows[e.first].insert(k);
      }
      for (const auto& e : m.data[i]) col_rows[e.first].erase(i);
      m.data[i].clear();
      row_done[i] = true;
      // column `best` is now zero apart from the pivot, so column operations
      // clear the pivot row without touching anything else
      ++rank;
      progress = true;
    }
  }
  return rank;
}

void divisibility_chain(std::vector<mpz_class>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  }
}

std::vector<mpz_class> dense_diagonal(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

SNFResult smith(IntMatrix m) {
  SNFResult out;
  const std::size_t units = eliminate_units(m);
  std::vector<std::uint32_t> live_rows;
  std::set<std::uint32_t> live_cols;
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    if (m.data[i].empty()) continue;
    live_rows.push_back(i);
    for (const auto& e : m.data[i]) live_cols.insert(e.first);
  }
  std::vector<std::uint32_t> cols(live_cols.begin(), live_cols.end());
  std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(cols.size()));
  for (std::size_t r = 0; r < live_rows.size(); ++r) {
    for (const auto& [j, v] : m.data[live_rows[r]]) {
      dense[r][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), j) - cols.begin())] = v;
    }
  }
  std::vector<mpz_class> diag = dense_diagonal(std::move(dense));
  out.rank = units + diag.size();
  divisibility_chain(diag);
  for (auto& d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace nqg
