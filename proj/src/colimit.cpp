#include "nqg/colimit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nqg/error.hpp"

namespace nqg {

bool D2Subgroup::contains(Element x, Element y) const { return derived.contains(parent->multiply(x, y)); }

D2Subgroup d2(const FiniteGroup& g) {
  D2Subgroup d;
  d.parent = &g;
  d.derived = derived_subgroup(g);
  d.order = g.order() * d.derived.order();
  if (g.order() <= kD2ExplicitLimit) {
    d.members.reserve(d.order);
    for (Element x = 0; x < g.order(); ++x) {
      const Element xinv = g.inverse(x);
      for (Element m : d.derived.members) d.members.emplace_back(x, g.multiply(xinv, m));
    }
    std::sort(d.members.begin(), d.members.end());
  }
  return d;
}

bool d2_antidiagonal_generation(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > kD2ExplicitLimit) throw BudgetError("antidiagonal generation needs |G| <= 1024");
  const D2Subgroup d = d2(g);
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<Element, Element>> span{{kIdentity, kIdentity}};
  seen[0] = true;
  for (std::size_t i = 0; i < span.size(); ++i) {
    const auto [x, y] = span[i];
    for (Element h = 1; h < n; ++h) {
      const Element a = g.multiply(x, h);
      const Element b = g.multiply(y, g.inverse(h));
      if (!seen[a * n + b]) {
        seen[a * n + b] = true;
        span.emplace_back(a, b);
      }
    }
  }
  std::sort(span.begin(), span.end());
  return span == d.members;
}

bool d2_projection_kernel(const D2Subgroup& d) {
  if (d.members.empty()) throw BudgetError("D2 members are only listed for |G| <= 1024");
  std::vector<Element> seconds;
  for (const auto& [x, y] : d.members) {
    if (x == kIdentity) seconds.push_back(y);
  }
  return seconds == d.derived.members;
}

std::unique_ptr<Colimit> enumerate_colimit(GroupPtr g, int q, std::size_t limit) {
  auto out = std::make_unique<Colimit>();
  out->group = std::move(g);
  out->presentation = build_presentation(*out->group, q);
  out->table = todd_coxeter(out->presentation, limit);
  return out;
}

namespace {

Element letter_element(const Presentation& p, int letter) {
  const FiniteGroup& g = *p.group;
  const Element x = p.generators[static_cast<std::size_t>(std::abs(letter)) - 1];
  return letter > 0 ? x : g.inverse(x);
}

void require_closed(const CosetTable& t) {
  if (!t.closed()) throw InputError("coset table is not closed");
  if (!t.presentation().group) throw InputError("presentation has no source group");
}

std::vector<Element> powers_of(const FiniteGroup& g, Element c) {
  std::vector<Element> out{kIdentity};
  for (Element x = c; x != kIdentity; x = g.multiply(x, c)) out.push_back(x);
  return out;
}

}  // namespace

Element epsilon(const Presentation& p, const Word& w) {
  const FiniteGroup& g = *p.group;
  Element x = kIdentity;
  for (int l : w) x = g.multiply(x, letter_element(p, l));
  return x;
}

std::pair<Element, Element> epsilon_bar(const Presentation& p, const Word& w) {
  const FiniteGroup& g = *p.group;
  Element x = kIdentity;
  Element y = kIdentity;
  for (int l : w) {
    const Element e = letter_element(p, l);
    x = g.multiply(x, e);
    y = g.multiply(y, g.inverse(e));
  }
  return {x, y};
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::inconclusive: return "INCONCLUSIVE";
  }
  return {};
}

Theorem1Run theorem1_verify(const SymplecticSequence& seq, std::size_t limit) {
  if (!seq.nontrivial || seq.r < 2) throw InputError("the N_2(S) against D2(S) check needs a nontrivial sequence with r >= 2");
  const FiniteGroup& g = *seq.group;
  const InducedGroup s = induced_group(sequence_subgroup(seq));
  const FiniteGroup& sg = *s.group;

  Theorem1Run run;
  run.sequence.group = &sg;
  run.sequence.r = seq.r;
  run.sequence.nontrivial = seq.nontrivial;
  for (Element x : seq.elements) run.sequence.elements.push_back(s.from_parent(x));
  run.sequence.c = s.from_parent(seq.c);

  const D2Subgroup ds = d2(sg);
  Theorem1Report& rep = run.report;
  rep.s_order = sg.order();
  rep.d2_order = ds.order;

  // [S,S] <= [G,G], so this holds whenever the derived subgroups are right.
  const Subgroup dg = derived_subgroup(g);
  rep.d2_inclusion = std::all_of(ds.derived.members.begin(), ds.derived.members.end(),
                                 [&](Element m) { return dg.contains(s.to_parent[m]); });

  run.n2 = enumerate_colimit(s.group, 2, limit);
  const CosetTable& t = run.n2->table;
  const Presentation& p = run.n2->presentation;
  rep.state = t.state();
  rep.coset_count = t.coset_count();
  rep.high_water = t.high_water();
  if (!t.closed()) return run;

  bool well_defined = true;
  for (const Word& r : p.relators) {
    if (epsilon_bar(p, r) != std::pair{kIdentity, kIdentity}) well_defined = false;
  }
  rep.epsilon_bar_well_defined = well_defined;

  std::vector<std::pair<Element, Element>> images;
  images.reserve(t.coset_count());
  for (const Word& w : t.representatives()) images.push_back(epsilon_bar(p, w));
  std::sort(images.begin(), images.end());
  rep.epsilon_bar_bijective = images == ds.members;

  bool factor = true;
  for (std::size_t k = 0; k < p.num_generators(); ++k) {
    const Word w{static_cast<int>(k) + 1};
    const Element gk = p.generators[k];
    const auto [x, y] = epsilon_bar(p, w);
    if (x != gk || y != sg.inverse(gk) || epsilon(p, w) != x) factor = false;
  }
  rep.factorization = factor;

  const bool orders_match = rep.coset_count == rep.d2_order;
  rep.verdict = orders_match && well_defined && *rep.epsilon_bar_bijective && factor && rep.d2_inclusion
                    ? Outcome::pass
                    : Outcome::fail;
  return run;
}

Word k_word(const SymplecticSequence& seq, const Presentation& p, std::size_t i) {
  const FiniteGroup& g = *seq.group;
  const Element a = seq.elements[i];
  const Element b = seq.elements[i + seq.r];
  return concat({inverse_word(p.letter(g.multiply(a, b))), p.letter(a), p.letter(b)});
}

bool LemmaReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

LemmaReport lemma_suite(const SymplecticSequence& seq, const CosetTable& t, const LemmaOptions& options) {
  require_closed(t);
  const Presentation& p = t.presentation();
  if (p.group != seq.group) throw InputError("table does not belong to the sequence's group");
  if (p.q != 2) throw InputError("lemma suite runs on N_2");
  const FiniteGroup& g = *seq.group;
  const std::size_t r = seq.r;
  auto is_one = [&](const Word& w) { return trace_word(t, w) == 0; };
  auto same = [&](const Word& a, const Word& b) { return trace_word(t, concat({a, inverse_word(b)})) == 0; };
  auto gen = [&](std::size_t i) { return seq.elements[i]; };

  LemmaReport rep;
  rep.seed = options.seed;
  const Word k = k_word(seq, p, 0);
  const auto cpow = powers_of(g, seq.c);
  const int corder = static_cast<int>(cpow.size());

  bool kij = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && !same(k_word(seq, p, i), k_word(seq, p, j))) kij = false;
    }
  }
  rep.checks["k_i_equal"] = kij;

  bool power = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (int m = 1; m <= corder; ++m) {
      const Element gm = g.power(gen(i), m);
      const Word rhs = concat({inverse_word(p.letter(g.multiply(gm, gen(i + r)))), p.letter(gm), p.letter(gen(i + r))});
      if (!same(power_word(k, m), rhs)) power = false;
    }
  }
  rep.checks["power"] = power;

  // (x)(y)(xy)^-1 = k^alpha where [x, y] = c^alpha
  bool merge = true;
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < r && merge; ++i) {
    const Subgroup h = closure(g, {gen(i), gen(i + r)});
    auto check_pair = [&](Element x, Element y) {
      const auto it = std::find(cpow.begin(), cpow.end(), commutator(g, x, y));
      if (it == cpow.end()) return false;
      const Word lhs = concat({p.letter(x), p.letter(y), inverse_word(p.letter(g.multiply(x, y)))});
      return same(lhs, power_word(k, it - cpow.begin()));
    };
    if (h.order() <= options.exhaustive_merge_limit) {
      for (Element x : h.members) {
        for (Element y : h.members) {
          if (!check_pair(x, y)) merge = false;
        }
      }
    } else {
      rep.merge_exhaustive = false;
      for (std::size_t s = 0; s < options.merge_samples; ++s) {
        const Element x = h.members[rng() % h.order()];
        const Element y = h.members[rng() % h.order()];
        if (!check_pair(x, y)) merge = false;
      }
    }
  }
  rep.checks["merge"] = merge;

  const auto [lo, hi] = options.exponent_range.value_or(std::pair{-corder, corder});
  bool law = true;
  for (std::size_t i = 0; i < r && law; ++i) {
    for (int a = lo; a <= hi; ++a) {
      for (int b = lo; b <= hi; ++b) {
        const Word u = p.letter(g.multiply(g.power(gen(i), a), g.power(gen(i + r), b)));
        for (int c = lo; c <= hi; ++c) {
          for (int d = lo; d <= hi; ++d) {
            const Word v = p.letter(g.multiply(g.power(gen(i), c), g.power(gen(i + r), d)));
            const Word lhs = commutator_word(u, v);
            for (std::size_t j = 0; j < r; ++j) {
              const Word base = commutator_word(p.letter(gen(j)), p.letter(gen(j + r)));
              if (!same(lhs, power_word(base, static_cast<long long>(a) * d - static_cast<long long>(b) * c))) {
                law = false;
              }
            }
          }
        }
      }
    }
  }
  rep.checks["commutator_law"] = law;

  bool central = true;
  for (std::size_t x = 1; x <= p.num_generators(); ++x) {
    if (!is_one(commutator_word(k, Word{static_cast<int>(x)}))) central = false;
  }
  rep.checks["k_central"] = central;

  rep.k_order = word_order(t, k);
  rep.kernel_order = t.coset_count() / g.order();
  rep.checks["central_extension"] = t.coset_count() % g.order() == 0 && epsilon(p, k) == kIdentity &&
                                     rep.kernel_order == rep.k_order &&
                                     rep.k_order == static_cast<std::size_t>(corder);
  return rep;
}

ImageReport sequence_image_in_n2(const SymplecticSequence& seq, const CosetTable& t) {
  require_closed(t);
  const Presentation& p = t.presentation();
  if (p.group != seq.group) throw InputError("table does not belong to the sequence's group");
  const std::size_t n = seq.elements.size();
  const std::size_t r = seq.r;
  auto letter = [&](std::size_t i) { return p.letter(seq.elements[i]); };
  const Word c = commutator_word(letter(0), letter(r));
  ImageReport rep;
  rep.symplectic = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Word w = commutator_word(letter(i), letter(j));
      const Word target = j - i == r ? c : Word{};
      if (trace_word(t, concat({w, inverse_word(target)})) != 0) rep.symplectic = false;
    }
  }
  rep.nontrivial = trace_word(t, c) != 0;
  return rep;
}

OmegaReport omega_check(const CosetTable& t, long long n) {
  require_closed(t);
  const Presentation& p = t.presentation();
  const FiniteGroup& g = *p.group;
  std::vector<Word> image(p.num_generators() + 1);
  for (std::size_t k = 1; k <= p.num_generators(); ++k) image[k] = p.letter(g.power(p.generators[k - 1], n));
  auto omega = [&](const Word& w) {
    Word out;
    for (int l : w) {
      const Word& x = image[static_cast<std::size_t>(std::abs(l))];
      if (l > 0) {
        out.insert(out.end(), x.begin(), x.end());
      } else {
        const Word xi = inverse_word(x);
        out.insert(out.end(), xi.begin(), xi.end());
      }
    }
    return out;
  };
  OmegaReport rep;
  rep.well_defined = std::all_of(p.relators.begin(), p.relators.end(),
                                 [&](const Word& r) { return trace_word(t, omega(r)) == 0; });
  if (n == -1 && rep.well_defined) {
    const auto& reps = t.representatives();
    std::vector<CosetTable::Coset> map(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) map[c] = trace_word(t, omega(reps[c]));
    bool inv = true;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (map[map[c]] != c) inv = false;
    }
    rep.involutive = inv;
  } else if (n == -1) {
    rep.involutive = false;
  }
  return rep;
}

KernelReport epsilon_kernel(const FiniteGroup& g, const CosetTable& t, const SymplecticSequence* seq) {
  KernelReport rep;
  rep.state = t.state();
  if (!t.closed()) return rep;
  if (t.coset_count() % g.order() != 0) throw std::logic_error("|N| is not a multiple of |G|");
  rep.n2_order = t.coset_count();
  rep.kernel_order = t.coset_count() / g.order();
  rep.kernel_is_torsion_free = *rep.kernel_order == 1;
  if (seq) {
    if (seq->group != t.presentation().group) throw InputError("table does not belong to the sequence's group");
    rep.k_order = word_order(t, k_word(*seq, t.presentation(), 0));
  }
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_k_pi_1: return "NOT_K_PI_1";
    case Verdict::k_pi_1: return "K_PI_1";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return {};
}

VerdictReport kpi1_verdict(GroupPtr g, std::uint64_t search_budget, std::size_t coset_limit) {
  VerdictReport rep;
  rep.search_budget = search_budget;
  rep.coset_limit = coset_limit;
  if (g->is_abelian()) {
    rep.verdict = Verdict::k_pi_1;
    rep.reason = "abelian";
    rep.search = "skipped";
    return rep;
  }
  // any sequence with r >= 2 restricts to one with r = 2
  const SearchResult found = find_symplectic(*g, 2, search_budget);
  if (const auto* f = std::get_if<SearchFound>(&found)) {
    rep.search = "found";
    rep.search_nodes = f->nodes;
    rep.certificate = f->sequence;
    rep.verdict = Verdict::not_k_pi_1;
    rep.reason = "symplectic-sequence";
    return rep;
  }
  if (const auto* b = std::get_if<SearchBudgetExhausted>(&found)) {
    rep.search = "budget-exhausted";
    rep.search_nodes = b->nodes;
  } else {
    rep.search = "exhausted-none";
    rep.search_nodes = std::get<SearchExhaustedNone>(found).nodes;
  }

  const auto n2 = enumerate_colimit(g, 2, coset_limit);
  const CosetTable& t = n2->table;
  rep.enumeration = t.state();
  rep.coset_count = t.coset_count();
  rep.high_water = t.high_water();
  if (!t.closed()) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "budgets-exhausted";
    return rep;
  }
  rep.kernel_order = t.coset_count() / g->order();
  if (*rep.kernel_order == 1) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "kernel-trivial";
    return rep;
  }
  const auto& reps = t.representatives();
  for (std::size_t c = 1; c < reps.size(); ++c) {
    if (epsilon(n2->presentation, reps[c]) == kIdentity) {
      rep.torsion_witness = reps[c];
      rep.torsion_order = word_order(t, reps[c]);
      break;
    }
  }
  rep.verdict = Verdict::not_k_pi_1;
  rep.reason = "kernel-torsion";
  return rep;
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::inconclusive: return "inconclusive";
  }
  return {};
}

ConjectureReport conjecture_probe(GroupPtr g, int q, std::size_t coset_limit) {
  if (q < 2) throw InputError("q must be at least 2");
  ConjectureReport rep;
  rep.q = q;
  rep.nilpotency_class = nilpotency_class(*g);
  rep.predicted_isomorphism = rep.nilpotency_class && *rep.nilpotency_class < q;
  const auto nq = enumerate_colimit(g, q, coset_limit);
  rep.state = nq->table.state();
  rep.coset_count = nq->table.coset_count();
  rep.high_water = nq->table.high_water();
  if (nq->table.closed()) {
    rep.isomorphism = rep.coset_count == g->order();
    rep.agreement = *rep.isomorphism == rep.predicted_isomorphism ? Agreement::agree : Agreement::disagree;
  }
  return rep;
}

}  // namespace nqg
