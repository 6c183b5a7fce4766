#include "nqg/coset_enum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nqg/error.hpp"

namespace nqg {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word power_word(const Word& w, long long n) {
  const Word base = n < 0 ? inverse_word(w) : w;
  Word out;
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word commutator_word(const Word& a, const Word& b) { return concat({a, b, inverse_word(a), inverse_word(b)}); }

Word Presentation::letter(Element g) const {
  if (g == kIdentity) return {};
  auto it = std::lower_bound(generators.begin(), generators.end(), g);
  if (it == generators.end() || *it != g) throw InputError("element is not a generator of the presentation");
  return {static_cast<int>(it - generators.begin()) + 1};
}

std::string Presentation::dump() const {
  std::ostringstream out;
  out << "gens " << generators.size() << '\n';
  for (const auto& r : relators) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << '\n';
  }
  return out.str();
}

Presentation build_presentation(const FiniteGroup& g, int q) {
  if (q < 2) throw InputError("presentation needs q >= 2");
  if (g.order() > kMaxEnumeratedOrder) throw BudgetError("group too large for a colimit presentation");
  Presentation p;
  p.group = &g;
  p.q = q;
  for (Element x = 1; x < g.order(); ++x) p.generators.push_back(x);
  // generator index of element x is x itself, since ids are dense and 0 is excluded
  PairClassCache cache(g);
  for (Element a = 1; a < g.order(); ++a) {
    for (Element b = 1; b < g.order(); ++b) {
      if (!cache.below(a, b, q)) continue;
      const Element ab = g.multiply(a, b);
      if (ab == kIdentity) {
        p.relators.push_back({static_cast<int>(a), static_cast<int>(b)});
      } else {
        p.relators.push_back({-static_cast<int>(ab), static_cast<int>(a), static_cast<int>(b)});
      }
    }
  }
  return p;
}

Presentation abstract_presentation(std::size_t num_generators, std::vector<Word> relators) {
  Presentation p;
  for (std::size_t k = 1; k <= num_generators; ++k) p.generators.push_back(static_cast<Element>(k));
  for (const auto& r : relators) {
    for (int x : r) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > num_generators) {
        throw InputError("relator letter out of range");
      }
    }
  }
  p.relators = std::move(relators);
  return p;
}

std::string to_string(EnumerationState s) {
  switch (s) {
    case EnumerationState::in_progress: return "in-progress";
    case EnumerationState::closed: return "closed";
    case EnumerationState::limit_exceeded: return "limit-exceeded";
  }
  return {};
}

CosetTable::Coset CosetTable::act(Coset c, int letter) const {
  const std::size_t k = static_cast<std::size_t>(std::abs(letter)) - 1;
  const int col = letter > 0 ? fwd_[k] : inv_[k];
  return table_[std::size_t{c} * colinv_.size() + static_cast<std::size_t>(col)];
}

// ------------------------------------------------------------------------
// Felsch-style enumeration with union-find coincidence processing.

class Enumerator {
 public:
  using Coset = CosetTable::Coset;
  static constexpr Coset kNone = CosetTable::kUndefined;

  Enumerator(const Presentation& p, std::size_t limit, CosetTable& out) : p_(p), limit_(limit), out_(out) {}

  void run() {
    setup_columns();
    setup_relators();
    allocate_row();  // coset 0
    Coset alpha = 0;
    while (alpha < rows_) {
      if (alive(alpha)) {
        for (int col = 0; col < ncols_; ++col) {
          if (!alive(alpha)) break;
          if (entry(alpha, col) != kNone) continue;
          if (!define(alpha, col)) {
            finish(EnumerationState::limit_exceeded);
            return;
          }
          process_deductions();
        }
      }
      ++alpha;
    }
    finish(EnumerationState::closed);
  }

 private:
  bool alive(Coset c) const { return parent_[c] == c; }
  Coset& entry(Coset c, int col) { return table_[std::size_t{c} * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)]; }

  void setup_columns() {
    const std::size_t n = p_.num_generators();
    std::vector<long> partner(n, -1);
    for (const auto& r : p_.relators) {
      if (r.size() != 2 || r[0] <= 0 || r[1] <= 0) continue;
      const auto a = static_cast<std::size_t>(r[0] - 1);
      const auto b = static_cast<std::size_t>(r[1] - 1);
      if (partner[a] != -1 || partner[b] != -1) continue;
      partner[a] = static_cast<long>(b);
      partner[b] = static_cast<long>(a);
    }
    fwd_.assign(n, -1);
    inv_.assign(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
      if (fwd_[k] != -1) continue;
      if (partner[k] == static_cast<long>(k)) {
        fwd_[k] = inv_[k] = ncols_++;
      } else if (partner[k] != -1) {
        const auto b = static_cast<std::size_t>(partner[k]);
        fwd_[k] = ncols_++;
        inv_[k] = ncols_++;
        fwd_[b] = inv_[k];
        inv_[b] = fwd_[k];
      } else {
        fwd_[k] = ncols_++;
        inv_[k] = ncols_++;
      }
    }
    colinv_.assign(static_cast<std::size_t>(ncols_), -1);
    col_letter_.assign(static_cast<std::size_t>(ncols_), 0);
    for (std::size_t k = n; k-- > 0;) {
      colinv_[static_cast<std::size_t>(fwd_[k])] = inv_[k];
      colinv_[static_cast<std::size_t>(inv_[k])] = fwd_[k];
      col_letter_[static_cast<std::size_t>(inv_[k])] = -static_cast<int>(k + 1);
      col_letter_[static_cast<std::size_t>(fwd_[k])] = static_cast<int>(k + 1);
    }
  }

  std::vector<int> to_columns(const Word& w) const {
    std::vector<int> cols;
    for (int x : w) {
      const int c = x > 0 ? fwd_[static_cast<std::size_t>(x - 1)] : inv_[static_cast<std::size_t>(-x - 1)];
      if (!cols.empty() && colinv_[static_cast<std::size_t>(cols.back())] == c) {
        cols.pop_back();
      } else {
        cols.push_back(c);
      }
    }
    while (cols.size() >= 2 && colinv_[static_cast<std::size_t>(cols.back())] == cols.front()) {
      cols.pop_back();
      cols.erase(cols.begin());
    }
    return cols;
  }

  void setup_relators() {
    std::set<std::vector<int>> conjugates;
    for (const auto& r : p_.relators) {
      const auto w = to_columns(r);
      if (w.empty()) continue;
      std::vector<int> winv(w.rbegin(), w.rend());
      for (auto& c : winv) c = colinv_[static_cast<std::size_t>(c)];
      for (const std::vector<int>* base : {&w, static_cast<const std::vector<int>*>(&winv)}) {
        for (std::size_t s = 0; s < base->size(); ++s) {
          std::vector<int> rot(base->begin() + static_cast<long>(s), base->end());
          rot.insert(rot.end(), base->begin(), base->begin() + static_cast<long>(s));
          conjugates.insert(std::move(rot));
        }
      }
    }
    by_column_.assign(static_cast<std::size_t>(ncols_), {});
    conjugates_.assign(conjugates.begin(), conjugates.end());
    for (std::size_t i = 0; i < conjugates_.size(); ++i) {
      by_column_[static_cast<std::size_t>(conjugates_[i][0])].push_back(i);
    }
  }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const Coset next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset a, Coset b) {
    const Coset x = rep(a);
    const Coset y = rep(b);
    if (x == y) return;
    const Coset lo = std::min(x, y);
    const Coset hi = std::max(x, y);
    parent_[hi] = lo;
    queue_.push_back(hi);
    --live_;
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Coset g = queue_[i];
      for (int col = 0; col < ncols_; ++col) {
        const Coset d = entry(g, col);
        if (d == kNone) continue;
        const int icol = colinv_[static_cast<std::size_t>(col)];
        entry(d, icol) = kNone;
        const Coset m = rep(g);
        const Coset n = rep(d);
        if (entry(m, col) != kNone) {
          merge(n, entry(m, col));
        } else if (entry(n, icol) != kNone) {
          merge(m, entry(n, icol));
        } else {
          entry(m, col) = n;
          entry(n, icol) = m;
          deductions_.emplace_back(m, col);
        }
      }
    }
    queue_.clear();
  }

  void allocate_row() {
    const Coset c = static_cast<Coset>(rows_++);
    table_.resize(rows_ * static_cast<std::size_t>(ncols_), kNone);
    parent_.push_back(c);
    ++live_;
    ++total_;
    high_ = std::max(high_, live_);
  }

  bool define(Coset& alpha, int col) {
    if (live_ >= limit_) return false;
    if (rows_ >= limit_) compact(alpha);
    const Coset beta = static_cast<Coset>(rows_);
    allocate_row();
    entry(alpha, col) = beta;
    entry(beta, colinv_[static_cast<std::size_t>(col)]) = alpha;
    deductions_.emplace_back(alpha, col);
    return true;
  }

  // Drops dead rows, renumbering live cosets in order.  Only called with an
  // empty deduction stack.
  void compact(Coset& cursor) {
    std::vector<Coset> renum(rows_, kNone);
    Coset next = 0;
    for (Coset c = 0; c < rows_; ++c) {
      if (alive(c)) renum[c] = next++;
    }
    std::vector<Coset> fresh(std::size_t{next} * static_cast<std::size_t>(ncols_), kNone);
    for (Coset c = 0; c < rows_; ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        const Coset d = entry(c, col);
        fresh[std::size_t{renum[c]} * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)] =
            d == kNone ? kNone : renum[rep(d)];
      }
    }
    Coset new_cursor = 0;
    for (Coset c = 0; c <= cursor && c < rows_; ++c) {
      if (alive(c)) new_cursor = renum[c];
    }
    cursor = new_cursor;
    table_ = std::move(fresh);
    rows_ = next;
    parent_.resize(rows_);
    for (Coset c = 0; c < rows_; ++c) parent_[c] = c;
  }

  void scan(Coset alpha, const std::vector<int>& w) {
    Coset f = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unconsumed letter
    while (i < j && entry(f, w[i]) != kNone) f = entry(f, w[i++]);
    if (i == j) {
      if (f != alpha) coincidence(f, alpha);
      return;
    }
    Coset b = alpha;
    while (j > i && entry(b, colinv_[static_cast<std::size_t>(w[j - 1])]) != kNone) {
      b = entry(b, colinv_[static_cast<std::size_t>(w[j - 1])]);
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      entry(f, w[i]) = b;
      entry(b, colinv_[static_cast<std::size_t>(w[i])]) = f;
      deductions_.emplace_back(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [alpha, col] = deductions_.back();
      deductions_.pop_back();
      if (!alive(alpha)) continue;
      for (std::size_t idx : by_column_[static_cast<std::size_t>(col)]) {
        if (!alive(alpha)) break;
        scan(alpha, conjugates_[idx]);
      }
      if (!alive(alpha)) continue;
      const Coset beta = entry(alpha, col);
      if (beta == kNone) continue;
      for (std::size_t idx : by_column_[static_cast<std::size_t>(colinv_[static_cast<std::size_t>(col)])]) {
        if (!alive(beta)) break;
        scan(beta, conjugates_[idx]);
      }
    }
  }

  void finish(EnumerationState state) {
    out_.state_ = state;
    out_.limit_ = limit_;
    out_.high_water_ = high_;
    out_.total_defined_ = total_;
    out_.fwd_ = fwd_;
    out_.inv_ = inv_;
    out_.colinv_ = colinv_;
    out_.col_letter_ = col_letter_;
    out_.live_ = live_;
    if (state != EnumerationState::closed) return;

    // Standardize: renumber cosets breadth-first from 0 over columns in order.
    std::vector<Coset> renum(rows_, kNone);
    std::vector<Coset> order{0};
    renum[0] = 0;
    std::vector<Word> reps{Word{}};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int col = 0; col < ncols_; ++col) {
        const Coset d = rep(entry(order[i], col));
        if (renum[d] != kNone) continue;
        renum[d] = static_cast<Coset>(order.size());
        order.push_back(d);
        Word w = reps[i];
        w.push_back(col_letter_[static_cast<std::size_t>(col)]);
        reps.push_back(std::move(w));
      }
    }
    const std::size_t n = order.size();
    out_.table_.assign(n * static_cast<std::size_t>(ncols_), kNone);
    for (std::size_t i = 0; i < n; ++i) {
      for (int col = 0; col < ncols_; ++col) {
        out_.table_[i * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)] =
            renum[rep(entry(order[i], col))];
      }
    }
    out_.live_ = n;
    out_.reps_ = std::move(reps);
  }

  const Presentation& p_;
  std::size_t limit_;
  CosetTable& out_;
  int ncols_ = 0;
  std::vector<int> fwd_, inv_, colinv_, col_letter_;
  std::vector<std::vector<int>> conjugates_;
  std::vector<std::vector<std::size_t>> by_column_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::size_t high_ = 0;
  std::size_t total_ = 0;
  std::vector<std::pair<Coset, int>> deductions_;
  std::vector<Coset> queue_;
};

CosetTable todd_coxeter(const Presentation& p, std::size_t limit) {
  if (limit < 1) throw InputError("coset limit must be at least 1");
  CosetTable t;
  t.presentation_ = &p;
  Enumerator e(p, limit, t);
  e.run();
  return t;
}

CosetTable::Coset trace_word(const CosetTable& t, const Word& w, CosetTable::Coset start) {
  if (!t.closed()) throw std::logic_error("trace_word needs a closed coset table");
  CosetTable::Coset c = start;
  for (int x : w) c = t.act(c, x);
  return c;
}

std::size_t word_order(const CosetTable& t, const Word& w) {
  std::size_t n = 1;
  for (auto c = trace_word(t, w); c != 0; c = trace_word(t, w, c)) ++n;
  return n;
}

}  // namespace nqg
