#include "nqg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "nqg/bqg.hpp"
#include "nqg/colimit.hpp"
#include "nqg/constructions.hpp"
#include "nqg/error.hpp"
#include "nqg/report.hpp"
#include "nqg/symplectic.hpp"

namespace nqg::cli {

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string spec;
  std::size_t limit = kDefaultCosetLimit;
  std::uint64_t budget = 10'000'000;
  int q = 2;
  int dim = 1;
  std::size_t n = 2;
  std::size_t r = 2;
  bool seed_gl = false;
  std::vector<std::uint32_t> ids;
  std::size_t simplex_budget = kSimplexBudget;
  std::string dump_dir;
};

struct Loaded {
  GroupSpec spec;
  GroupPtr group;  // null when the order is above the enumeration ceiling
};

Loaded load(const std::string& text) {
  Loaded l;
  l.spec = GroupSpec::parse(text);
  const auto order = spec_order(l.spec);
  if (!order || *order <= kMaxEnumeratedOrder) l.group = build(l.spec);
  return l;
}

const FiniteGroup& need_group(const Loaded& l) {
  if (!l.group) throw BudgetError(l.spec.text() + " is above the enumeration ceiling of 2^20 elements");
  return *l.group;
}

GroupSection describe(const Loaded& l, bool details) {
  GroupSection s;
  s.spec = l.spec.text();
  if (l.group) {
    const FiniteGroup& g = *l.group;
    s.order = std::to_string(g.order());
    s.abelian = g.is_abelian();
    if (details) {
      s.conjugacy_classes = conjugacy_classes(g).size();
      const auto c = nilpotency_class(g);
      s.nilpotent = c.has_value();
      if (c) s.nilpotency_class = *c;
    }
  } else {
    s.materialized = false;
    s.order = spec_order(l.spec)->get_str();
    const auto ambient = ambient_perm_group(l.spec);
    const auto& gens = ambient->generators();
    s.abelian = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!(gens[i] * gens[j] == gens[j] * gens[i])) s.abelian = false;
      }
    }
  }
  return s;
}

SequenceCertificate certificate(const SymplecticSequence& seq) {
  const FiniteGroup& g = *seq.group;
  SequenceCertificate c;
  for (Element x : seq.elements) {
    c.ids.push_back(x);
    c.names.push_back(g.name(x));
  }
  c.c = g.name(seq.c);
  c.c_order = g.element_order(seq.c);
  c.nontrivial = seq.nontrivial;
  return c;
}

StructureInfo structure(const SymplecticSequence& seq) {
  const StructureReport r = structure_report(seq);
  StructureInfo s;
  s.subgroup_order = r.subgroup_order;
  s.c_order = r.c_order;
  s.derived_is_generated_by_c = r.derived_is_generated_by_c;
  s.c_central = r.c_central;
  s.c_commutes_with_sequence = r.c_commutes_with_sequence;
  s.bilinear = r.bilinear;
  return s;
}

ViolationInfo violation(const Violation& v) {
  static constexpr const char* kNames[] = {"pair-commutator", "commuting", "distinct"};
  return ViolationInfo{v.i + 1, v.j + 1, kNames[static_cast<int>(v.condition)], v.describe()};
}

D2Section d2_section(const FiniteGroup& g) {
  const D2Subgroup d = d2(g);
  D2Section s;
  s.order = d.order;
  s.derived_order = d.derived.order();
  if (!d.members.empty()) {
    s.antidiagonal_generation = d2_antidiagonal_generation(g);
    s.projection_kernel = d2_projection_kernel(d);
  }
  return s;
}

N2Section n2_section(const CosetTable& t, const FiniteGroup& g, std::string subject,
                     const SymplecticSequence* seq = nullptr) {
  N2Section s;
  s.subject = std::move(subject);
  s.q = t.presentation().q;
  s.state = to_string(t.state());
  s.coset_limit = t.limit();
  s.coset_count = t.coset_count();
  s.high_water = t.high_water();
  s.total_defined = t.total_defined();
  const KernelReport k = epsilon_kernel(g, t, seq);
  if (k.kernel_order) s.kernel_order = *k.kernel_order;
  s.kernel_is_torsion_free = k.kernel_is_torsion_free;
  if (k.k_order) s.k_order = *k.k_order;
  return s;
}

Theorem1Section theorem1_section(const Theorem1Report& r) {
  Theorem1Section s;
  s.s_order = r.s_order;
  s.d2_order = r.d2_order;
  s.coset_count = r.coset_count;
  s.state = to_string(r.state);
  s.epsilon_bar_well_defined = r.epsilon_bar_well_defined;
  s.epsilon_bar_bijective = r.epsilon_bar_bijective;
  s.factorization = r.factorization;
  s.d2_inclusion = r.d2_inclusion;
  s.verdict = to_string(r.verdict);
  return s;
}

// Lemma suite, image of the sequence and omega maps on a closed N_2(S).
void add_lemmas(AnalysisReport& rep, const Theorem1Run& run, std::uint64_t seed) {
  const CosetTable& t = run.n2->table;
  if (!t.closed()) return;
  LemmaOptions opts;
  opts.seed = seed;
  const LemmaReport lr = lemma_suite(run.sequence, t, opts);
  const int corder = static_cast<int>(run.sequence.group->element_order(run.sequence.c));
  LemmaSection ls;
  ls.checks = lr.checks;
  ls.k_order = lr.k_order;
  ls.kernel_order = lr.kernel_order;
  ls.merge_exhaustive = lr.merge_exhaustive;
  ls.seed = lr.seed;
  ls.exponent_min = -corder;
  ls.exponent_max = corder;
  rep.lemmas = ls;
  const ImageReport im = sequence_image_in_n2(run.sequence, t);
  rep.image = std::map<std::string, bool>{{"symplectic", im.symplectic}, {"nontrivial", im.nontrivial}};
  std::map<std::string, bool> omega;
  for (long long n : {-1LL, 1LL, 2LL}) omega[std::to_string(n)] = omega_check(t, n).ok();
  rep.omega = omega;
}

HomologyEntry entry(const HomologyGroup& h, int q, int degree) {
  HomologyEntry e;
  e.q = q;
  e.degree = degree;
  e.rank = h.rank;
  for (const auto& t : h.torsion) e.torsion.push_back(t.get_str());
  e.text = h.text();
  return e;
}

int cmd_info(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, true);
  return kExitOk;
}

// sym:n or alt:n with n = p^m, m >= 4: the image of {E_12, E_13, E_2m, E_3m}
// acting on F_p^m.
int seeded_gl_search(const Options& o, const Loaded& l, AnalysisReport& rep) {
  if (l.spec.family != Family::sym && l.spec.family != Family::alt) {
    throw InputError("--seed-gl applies to sym:n and alt:n");
  }
  const long long degree = l.spec.params[0];
  long long p = 0, m = 0;
  for (long long cand = 2; cand <= degree && !p; ++cand) {
    if (!is_prime(cand)) continue;
    long long v = 1, e = 0;
    while (v < degree) {
      v *= cand;
      ++e;
    }
    if (v == degree) {
      p = cand;
      m = e;
    }
  }
  if (!p || m < 4) throw InputError("--seed-gl needs a degree p^m with m >= 4");
  if (o.r != 2) throw InputError("--seed-gl produces a sequence with r = 2");
  const auto dim = static_cast<std::size_t>(m);
  const auto prime = static_cast<std::int32_t>(p);
  std::vector<Perm> perms;
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, static_cast<int>(dim)}, {3, static_cast<int>(dim)}}) {
    perms.push_back(matrix_action(elementary_matrix_key(dim, prime, i, j), dim, prime));
  }
  const auto checked = check_symplectic(perms);
  SymplecticSection s;
  s.mode = "find";
  s.r = 2;
  s.budget = o.budget;
  s.nodes = 0;
  EmbeddingInfo e;
  e.source = "gl:" + std::to_string(m) + ":" + std::to_string(p);
  e.degree = static_cast<std::uint64_t>(degree);
  e.symplectic = std::holds_alternative<PermSymplectic>(checked);
  e.even = std::all_of(perms.begin(), perms.end(), [](const Perm& x) { return x.is_even(); });
  const auto ambient = ambient_perm_group(l.spec);
  e.in_ambient = std::all_of(perms.begin(), perms.end(), [&](const Perm& x) { return ambient->contains(x); });
  s.embedding = e;
  if (!e.symplectic || !e.in_ambient) {
    s.outcome = "violation";
    if (const auto* v = std::get_if<Violation>(&checked)) s.violation = violation(*v);
    rep.symplectic = s;
    return kExitOk;
  }

  // S = <sequence> is small: enumerate it and certify inside S
  const GroupPtr sg = perm_group(perms);
  std::vector<Element> ids;
  for (const auto& x : perms) {
    std::vector<std::int32_t> key(x.images().begin(), x.images().end());
    ids.push_back(*sg->find(key));
  }
  const auto in_s = check_symplectic(*sg, ids);
  const auto& seq = std::get<SymplecticSequence>(in_s);
  s.outcome = "found";
  s.sequence = certificate(seq);
  s.sequence->ids.clear();  // ids of S are not ids of the ambient group
  s.structure = structure(seq);
  rep.symplectic = s;

  Theorem1Run run = theorem1_verify(seq, o.limit);
  Theorem1Section t1 = theorem1_section(run.report);
  // [Sym(n), Sym(n)] = [Alt(n), Alt(n)] = Alt(n) for n >= 5
  const Subgroup ds = derived_subgroup(*sg);
  t1.d2_inclusion_ambient = std::all_of(ds.members.begin(), ds.members.end(), [&](Element x) {
    const auto k = sg->key(x);
    std::vector<Perm::point_type> images(k.begin(), k.end());
    return Perm(images).is_even();
  });
  if (t1.verdict == "PASS" && !*t1.d2_inclusion_ambient) t1.verdict = "FAIL";
  rep.theorem1 = t1;
  rep.n2 = n2_section(run.n2->table, *run.n2->group, "sequence-subgroup", &run.sequence);
  add_lemmas(rep, run, o.seed);
  return t1.verdict == "INCONCLUSIVE" ? kExitInconclusive : kExitOk;
}

int cmd_symplectic_check(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  const FiniteGroup& g = need_group(l);
  std::vector<Element> ids(o.ids.begin(), o.ids.end());
  SymplecticSection s;
  s.mode = "check";
  s.r = ids.size() / 2;
  const auto result = check_symplectic(g, ids);
  if (const auto* seq = std::get_if<SymplecticSequence>(&result)) {
    s.outcome = "valid";
    s.sequence = certificate(*seq);
    s.structure = structure(*seq);
  } else {
    s.outcome = "violation";
    s.violation = violation(std::get<Violation>(result));
  }
  rep.symplectic = s;
  return kExitOk;
}

int cmd_symplectic_find(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  if (o.seed_gl) return seeded_gl_search(o, l, rep);
  const FiniteGroup& g = need_group(l);
  SymplecticSection s;
  s.mode = "find";
  s.r = o.r;
  s.budget = o.budget;
  const SearchResult res = find_symplectic(g, o.r, o.budget);
  int code = kExitOk;
  if (const auto* f = std::get_if<SearchFound>(&res)) {
    s.outcome = "found";
    s.nodes = f->nodes;
    s.sequence = certificate(f->sequence);
    s.structure = structure(f->sequence);
  } else if (const auto* b = std::get_if<SearchBudgetExhausted>(&res)) {
    s.outcome = "budget-exhausted";
    s.nodes = b->nodes;
    code = kExitInconclusive;
  } else {
    s.outcome = "exhausted-none";
    s.nodes = std::get<SearchExhaustedNone>(res).nodes;
  }
  rep.symplectic = s;
  return code;
}

int cmd_n2(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  const FiniteGroup& g = need_group(l);
  const auto nq = enumerate_colimit(l.group, o.q, o.limit);
  rep.n2 = n2_section(nq->table, g, "group");
  if (o.q == 2 && g.order() <= kD2ExplicitLimit) rep.d2 = d2_section(g);
  return nq->table.closed() ? kExitOk : kExitInconclusive;
}

int cmd_verdict(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  const FiniteGroup& g = need_group(l);
  const VerdictReport v = kpi1_verdict(l.group, o.budget, o.limit);
  VerdictSection vs;
  vs.value = to_string(v.verdict);
  vs.reason = v.reason;
  vs.search = v.search;
  vs.search_budget = v.search_budget;
  vs.search_nodes = v.search_nodes;
  vs.coset_limit = v.coset_limit;
  if (v.enumeration) {
    vs.enumeration = to_string(*v.enumeration);
    vs.coset_count = v.coset_count;
    vs.high_water = v.high_water;
  }
  if (v.kernel_order) vs.kernel_order = *v.kernel_order;
  vs.torsion_witness = v.torsion_witness;
  vs.torsion_order = v.torsion_order;
  rep.verdict = vs;
  if (g.order() <= kD2ExplicitLimit) rep.d2 = d2_section(g);

  if (v.certificate) {
    const SymplecticSequence& seq = *v.certificate;
    SymplecticSection s;
    s.mode = "find";
    s.outcome = "found";
    s.r = seq.r;
    s.budget = o.budget;
    s.nodes = v.search_nodes;
    s.sequence = certificate(seq);
    s.structure = structure(seq);
    rep.symplectic = s;
    Theorem1Run run = theorem1_verify(seq, o.limit);
    rep.theorem1 = theorem1_section(run.report);
    const bool whole = run.report.s_order == g.order();
    rep.n2 = n2_section(run.n2->table, *run.n2->group, whole ? "group" : "sequence-subgroup", &run.sequence);
    add_lemmas(rep, run, o.seed);
  }
  return v.verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_homology(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  const FiniteGroup& g = need_group(l);
  if (o.dim < 0 || o.dim > 2) throw InputError("--dim must be 0, 1 or 2");
  const ChainComplex cx = build_complex(g, o.q, static_cast<std::size_t>(o.dim) + 1, o.simplex_budget);
  if (!o.dump_dir.empty()) {
    std::filesystem::create_directories(o.dump_dir);
    for (std::size_t n = 1; n < cx.boundary.size(); ++n) {
      std::ofstream f(std::filesystem::path(o.dump_dir) / ("boundary_" + std::to_string(n) + ".txt"));
      if (!f) throw InputError("cannot write to " + o.dump_dir);
      dump_matrix(cx.boundary[n], f);
    }
  }
  for (int k = 0; k <= o.dim; ++k) rep.homology.push_back(entry(homology(cx, k), o.q, k));
  if (o.q == 2 && o.dim >= 1) {
    H1Section h;
    h.from_presentation = entry(abelianized_presentation(g, 2), 2, 1);
    h.from_complex = rep.homology[1];
    h.agree = h.from_presentation.rank == h.from_complex.rank && h.from_presentation.torsion == h.from_complex.torsion;
    rep.h1_consistency = h;
  }
  return kExitOk;
}

int cmd_hom_count(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  const FiniteGroup& g = need_group(l);
  HomCountSection h;
  h.n = o.n;
  h.q = o.q;
  h.count = hom_count(g, o.n, o.q).get_str();
  rep.hom_count = h;
  return kExitOk;
}

int cmd_conjecture(const Options& o, AnalysisReport& rep) {
  const Loaded l = load(o.spec);
  rep.group = describe(l, false);
  need_group(l);
  const ConjectureReport c = conjecture_probe(l.group, o.q, o.limit);
  ConjectureSection s;
  s.q = c.q;
  s.nilpotency_class = c.nilpotency_class;
  s.predicted_isomorphism = c.predicted_isomorphism;
  s.state = to_string(c.state);
  s.coset_count = c.coset_count;
  s.high_water = c.high_water;
  s.isomorphism = c.isomorphism;
  s.agreement = to_string(c.agreement);
  rep.conjecture = s;
  return c.agreement == Agreement::inconclusive ? kExitInconclusive : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Colimits of abelian subgroups, symplectic sequences and B(q,G)", "nqg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the JSON report");
  app.add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();

  auto spec_arg = [&](CLI::App* c) { c->add_option("spec", o.spec, "Group spec, e.g. extraspecial:2:2")->required(); };
  auto limit_opt = [&](CLI::App* c) {
    c->add_option("--limit", o.limit, "Coset limit")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto budget_opt = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Search node budget")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto q_opt = [&](CLI::App* c) { c->add_option("--q", o.q, "Class bound q")->capture_default_str()->check(CLI::Range(2, 64)); };

  std::function<int(const Options&, AnalysisReport&)> handler;
  std::string command;
  auto bind = [&](CLI::App* c, std::string name, int (*fn)(const Options&, AnalysisReport&)) {
    c->callback([&handler, &command, name, fn] {
      command = name;
      handler = fn;
    });
  };

  auto* info = app.add_subcommand("info", "Order, abelian flag, conjugacy classes, nilpotency class");
  spec_arg(info);
  bind(info, "info", cmd_info);

  auto* sym = app.add_subcommand("symplectic", "Check or search for symplectic sequences");
  sym->require_subcommand(1);
  auto* check = sym->add_subcommand("check", "Certify a candidate sequence given by element ids");
  spec_arg(check);
  check->add_option("--ids", o.ids, "Element ids g_1 .. g_2r")->required()->expected(2, 1 << 20);
  bind(check, "symplectic check", cmd_symplectic_check);
  auto* find = sym->add_subcommand("find", "Search for a nontrivial sequence");
  spec_arg(find);
  find->add_option("--r", o.r, "Half-length r")->capture_default_str()->check(CLI::Range(2, 64));
  budget_opt(find);
  limit_opt(find);
  find->add_flag("--seed-gl", o.seed_gl, "Use the image of the GL sequence in sym:p^m / alt:p^m");
  bind(find, "symplectic find", cmd_symplectic_find);

  auto* n2 = app.add_subcommand("n2", "Enumerate N_q(G)");
  spec_arg(n2);
  limit_opt(n2);
  q_opt(n2);
  bind(n2, "n2", cmd_n2);

  auto* verdict = app.add_subcommand("verdict", "Decide whether B(2,G) can be a K(pi,1)");
  spec_arg(verdict);
  limit_opt(verdict);
  budget_opt(verdict);
  bind(verdict, "verdict", cmd_verdict);

  auto* hom = app.add_subcommand("homology", "H_0 .. H_dim of B(q,G)");
  spec_arg(hom);
  hom->add_option("--dim", o.dim, "Top degree (0, 1 or 2)")->capture_default_str()->check(CLI::Range(0, 2));
  q_opt(hom);
  hom->add_option("--simplex-budget", o.simplex_budget, "Maximum simplices per degree")->capture_default_str();
  hom->add_option("--dump-matrices", o.dump_dir, "Write boundary matrices to this directory");
  bind(hom, "homology", cmd_homology);

  auto* hc = app.add_subcommand("hom-count", "Count commuting n-tuples");
  spec_arg(hc);
  hc->add_option("--n", o.n, "Tuple length")->capture_default_str()->check(CLI::Range(1, 16));
  q_opt(hc);
  bind(hc, "hom-count", cmd_hom_count);

  auto* conj = app.add_subcommand("conjecture", "Compare N_q(G) -> G with the nilpotency class");
  spec_arg(conj);
  limit_opt(conj);
  q_opt(conj);
  bind(conj, "conjecture", cmd_conjecture);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    AnalysisReport rep;
    rep.command = command;
    const int code = handler(o, rep);
    out << (o.json ? render_json(rep) : render_text(rep));
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace nqg::cli
