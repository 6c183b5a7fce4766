#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nqg/group.hpp"
#include "nqg/group_ops.hpp"

namespace nqg {

/// Signed 1-based generator indices; -k is the inverse of generator k.
using Word = std::vector<int>;

Word inverse_word(const Word& w);
Word concat(std::initializer_list<Word> parts);
Word power_word(const Word& w, long long n);
Word commutator_word(const Word& a, const Word& b);  // a b a^-1 b^-1

/// Presentation of the colimit N_q(G): one generator (g) per non-identity
/// element of G, one relator (gh)^-1 (g)(h) per ordered pair of
/// non-identity elements with class(<g, h>) < q, shortened to (g)(h) when
/// gh = 1.
struct Presentation {
  const FiniteGroup* group = nullptr;  // null for hand-written presentations
  int q = 2;
  std::vector<Element> generators;     // generator k is generators[k-1]
  std::vector<Word> relators;

  std::size_t num_generators() const { return generators.size(); }
  /// Word for the generator (g); the empty word for the identity.
  Word letter(Element g) const;
  /// Plain-text dump: "gens k" then one relator per line.
  std::string dump() const;
};

Presentation build_presentation(const FiniteGroup& g, int q);

/// Abstract presentation with `num_generators` generators (no group).
Presentation abstract_presentation(std::size_t num_generators, std::vector<Word> relators);

enum class EnumerationState { in_progress, closed, limit_exceeded };

std::string to_string(EnumerationState s);

inline constexpr std::size_t kDefaultCosetLimit = 1'000'000;

/// Coset table of the trivial subgroup.  Relators of length two pair
/// generator columns (x y = 1 makes the column of y the inverse column of
/// x); all other relators drive Felsch-style deduction processing.
class CosetTable {
 public:
  using Coset = std::uint32_t;
  static constexpr Coset kUndefined = static_cast<Coset>(-1);

  EnumerationState state() const { return state_; }
  bool closed() const { return state_ == EnumerationState::closed; }
  /// Live cosets; equals |N| once closed.
  std::size_t coset_count() const { return live_; }
  std::size_t high_water() const { return high_water_; }
  std::size_t total_defined() const { return total_defined_; }
  std::size_t limit() const { return limit_; }
  std::size_t num_columns() const { return colinv_.size(); }
  const Presentation& presentation() const { return *presentation_; }

  /// Image of coset `c` under one letter (signed generator index).
  Coset act(Coset c, int letter) const;
  /// Representative word of each coset (shortest-first spanning tree).
  const std::vector<Word>& representatives() const { return reps_; }

 private:
  friend class Enumerator;
  friend CosetTable todd_coxeter(const Presentation&, std::size_t);

  const Presentation* presentation_ = nullptr;
  EnumerationState state_ = EnumerationState::in_progress;
  std::size_t live_ = 0;
  std::size_t high_water_ = 0;
  std::size_t total_defined_ = 0;
  std::size_t limit_ = 0;
  std::vector<int> fwd_, inv_;     // per generator (0-based): column
  std::vector<int> colinv_;        // column -> inverse column
  std::vector<int> col_letter_;    // column -> a letter acting by it
  std::vector<Coset> table_;       // live_ * num_columns when closed
  std::vector<Word> reps_;
};

/// Enumerates cosets of the trivial subgroup with at most `limit` live
/// cosets.  Deterministic: same presentation and limit give the same table.
/// The presentation must outlive the table.
CosetTable todd_coxeter(const Presentation& p, std::size_t limit = kDefaultCosetLimit);

/// Coset reached from `start` by w; throws std::logic_error unless closed.
CosetTable::Coset trace_word(const CosetTable& t, const Word& w, CosetTable::Coset start = 0);

/// Order of the element represented by w (trace powers until coset 0).
std::size_t word_order(const CosetTable& t, const Word& w);

}  // namespace nqg
