// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nqg/bqg.hpp"
#include "nqg/cli.hpp"
#include "nqg/colimit.hpp"
#include "nqg/constructions.hpp"
#include "nqg/report.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nqg;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct CliRun {
  std::vector<std::string> args;
  int code = 0;
  std::string json;
};

// Every JSON-producing run, replayed for the determinism criterion.
std::vector<CliRun> g_runs;

CliRun cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  CliRun r{args, cli::run(args, out, err), out.str()};
  g_runs.push_back(r);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<long, int> primary(const std::vector<mpz_class>& torsion) {
  std::map<long, int> out;
  for (mpz_class d : torsion) {
    for (long p = 2; d > 1; ++p) {
      long q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      if (q > 1) ++out[q];
    }
  }
  return out;
}

void criterion1() {
  struct Case {
    int p;
    oracle::Table table;
    double seconds;
  };
  for (const Case& c : {Case{2, oracle::heisenberg(2, 2), 10}, Case{3, oracle::heisenberg(3, 2), 120}}) {
    const std::string spec = "extraspecial:" + std::to_string(c.p) + ":2";
    const std::uint64_t d2 = oracle::d2_count(c.table);
    const auto t0 = std::chrono::steady_clock::now();
    const CliRun run = cli_json({"verdict", spec});
    const double dt = seconds_since(t0);
    expect(run.code == cli::kExitOk, spec + ": exit code " + std::to_string(run.code));
    const AnalysisReport r = parse_report(run.json);
    expect(r.verdict && r.verdict->value == "NOT_K_PI_1", spec + ": verdict");
    expect(r.symplectic && r.symplectic->sequence && r.symplectic->sequence->nontrivial, spec + ": sequence");
    expect(r.n2 && r.n2->state == "closed", spec + ": enumeration not closed");
    const std::uint64_t p = c.p;
    const std::uint64_t expected = p * p * p * p * p * p;
    expect(r.n2->coset_count == expected, spec + ": |N2| = " + std::to_string(r.n2->coset_count));
    expect(r.n2->coset_count == d2, spec + ": |N2| differs from brute-force |D2| " + std::to_string(d2));
    expect(r.n2->kernel_order == p, spec + ": kernel order");
    expect(r.n2->k_order == p, spec + ": |k|");
    expect(r.theorem1 && r.theorem1->verdict == "PASS", spec + ": N2(S) against D2(S)");
    expect(dt < c.seconds, spec + ": took " + std::to_string(dt) + " s");
  }
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto gl = build("gl:4:2");
  const auto seq = gl_symplectic_sequence(*gl);
  const auto checked = check_symplectic(*gl, seq);
  expect(std::holds_alternative<SymplecticSequence>(checked), "sequence in gl(4,2) not symplectic");
  const auto& s = std::get<SymplecticSequence>(checked);
  expect(s.nontrivial, "sequence in gl(4,2) trivial");

  const PermEmbedding emb = embed_gl_in_sym(*gl);
  expect(emb.degree == 16, "embedding degree");
  std::vector<Perm> perms;
  for (Element x : seq) perms.push_back(emb.images[x]);
  const auto pc = check_symplectic(std::span<const Perm>(perms));
  expect(std::holds_alternative<PermSymplectic>(pc) && std::get<PermSymplectic>(pc).nontrivial,
         "image on 16 points not symplectic");
  for (const Perm& p : perms) expect(p.is_even(), "odd permutation in image");
  const auto s16 = ambient_perm_group(GroupSpec::parse("sym:16"));
  for (const Perm& p : perms) expect(s16->contains(p), "image outside sym:16");

  const Theorem1Run run = theorem1_verify(s);
  expect(run.report.s_order == 32, "|S| = " + std::to_string(run.report.s_order));
  const auto induced = induced_group(closure(*gl, s.elements));
  const std::uint64_t d2 = oracle::d2_count(support::as_table(*induced.group));
  expect(run.report.d2_order == 64 && d2 == 64, "|D2(S)|");
  expect(run.report.coset_count == 64, "|N2(S)| = " + std::to_string(run.report.coset_count));
  expect(run.report.verdict == Outcome::pass, "N2(S) against D2(S): " + to_string(run.report.verdict));

  const CliRun cli = cli_json({"symplectic", "find", "sym:16", "--r", "2", "--seed-gl"});
  const AnalysisReport r = parse_report(cli.json);
  expect(cli.code == cli::kExitOk && r.theorem1 && r.theorem1->verdict == "PASS" && r.theorem1->coset_count == 64,
         "seeded search through the CLI");
  const double dt = seconds_since(t0);
  expect(dt < 30, "took " + std::to_string(dt) + " s");
}

void criterion3() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 16; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (const char* s : {"product:(cyclic:2),(cyclic:2)", "product:(cyclic:2),(cyclic:4)",
                        "product:(cyclic:2),(cyclic:6)", "product:(cyclic:3),(cyclic:3)",
                        "product:(cyclic:4),(cyclic:4)", "product:(cyclic:2),(product:(cyclic:2),(cyclic:2))"}) {
    specs.push_back(s);
  }
  for (const auto& spec : specs) {
    const CliRun n2 = cli_json({"n2", spec});
    const AnalysisReport nr = parse_report(n2.json);
    expect(n2.code == cli::kExitOk && nr.n2 && nr.n2->state == "closed", spec + ": enumeration");
    expect(std::to_string(nr.n2->coset_count) == nr.group.order, spec + ": |N2| != |G|");
    const CliRun v = cli_json({"verdict", spec});
    const AnalysisReport vr = parse_report(v.json);
    expect(v.code == cli::kExitOk && vr.verdict && vr.verdict->value == "K_PI_1", spec + ": verdict");
  }
}

void criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = extraspecial(2, 2);
  const auto seq = std::get<SymplecticSequence>(check_symplectic(*e, extraspecial_symplectic_basis(*e)));
  const auto n2 = enumerate_colimit(e, 2);
  expect(n2->table.closed(), "N2 not closed");
  expect(closure(*e, {seq.elements[0], seq.elements[2]}).order() == 8, "<g1, g3> is not of order 8");
  LemmaOptions options;
  options.exponent_range = std::pair{0, 1};
  const LemmaReport rep = lemma_suite(seq, n2->table, options);
  for (const char* name : {"k_i_equal", "power", "merge", "commutator_law", "k_central"}) {
    expect(rep.checks.at(name), std::string("lemma check ") + name);
  }
  expect(rep.merge_exhaustive, "merge identity sampled instead of exhaustive");
  const double dt = seconds_since(t0);
  expect(dt < 5, "took " + std::to_string(dt) + " s");
}

const char* const kSmallSuite[] = {"cyclic:1",   "cyclic:6",   "product:(cyclic:2),(cyclic:4)",
                                   "product:(cyclic:3),(cyclic:3)", "sym:3", "dihedral:8", "quaternion",
                                   "extraspecial:2:2"};

void criterion5() {
  for (const char* spec : kSmallSuite) {
    const auto g = build(spec);
    const oracle::Table t = support::as_table(*g);
    const D2Subgroup d = d2(*g);
    expect(d.order == oracle::d2_count(t), std::string(spec) + ": |D2| vs brute force");
    expect(d.order == g->order() * oracle::derived(t).size(), std::string(spec) + ": |D2| != |G||[G,G]|");
    expect(d2_antidiagonal_generation(*g), std::string(spec) + ": antidiagonal generation");
    expect(d2_projection_kernel(d), std::string(spec) + ": kernel of the first projection");
  }
}

void criterion6() {
  const char* const suite[] = {"cyclic:1", "cyclic:6", "product:(cyclic:2),(cyclic:4)", "sym:3", "dihedral:8",
                               "quaternion", "extraspecial:2:2", "alt:4", "sym:4", "dihedral:12", "extraspecial:3:1"};
  for (const char* spec : suite) {
    const auto g = build(spec);
    const oracle::Table t = support::as_table(*g);
    const mpz_class n = hom_count(*g, 2);
    expect(n == oracle::hom_count(t, 2), std::string(spec) + ": |Hom(Z^2, G)| vs brute force");
    expect(n == oracle::class_count(t) * g->order(), std::string(spec) + ": |Hom(Z^2, G)| vs k(G)|G|");
  }
  const std::uint64_t q8 = oracle::hom_count(oracle::quaternion(), 3);
  expect(hom_count(*build("quaternion"), 3) == q8, "|Hom(Z^3, Q8)|");
  const CliRun run = cli_json({"hom-count", "quaternion", "--n", "3"});
  expect(parse_report(run.json).hom_count->count == std::to_string(q8), "hom-count through the CLI");
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* spec : {"cyclic:6", "sym:3", "dihedral:8", "quaternion", "extraspecial:2:2"}) {
    const CliRun run = cli_json({"homology", spec, "--dim", "1"});
    const AnalysisReport r = parse_report(run.json);
    expect(run.code == cli::kExitOk && r.h1_consistency && r.h1_consistency->agree,
           std::string(spec) + ": H1 consistency");
  }
  const HomologyGroup q8 = homology(*build("quaternion"), 2, 1);
  expect(q8.rank == 0 && primary(q8.torsion) == std::map<long, int>{{4, 1}, {2, 2}}, "H1(Q8) = " + q8.text());
  const HomologyGroup s3 = homology(*build("sym:3"), 2, 1);
  expect(s3.rank == 0 && primary(s3.torsion) == std::map<long, int>{{2, 3}, {3, 1}}, "H1(S3) = " + s3.text());
  const double dt = seconds_since(t0);
  expect(dt < 60, "took " + std::to_string(dt) + " s");
}

void criterion8() {
  const CliRun run = cli_json({"n2", "sym:3", "--limit", "100000"});
  expect(run.code == cli::kExitInconclusive, "exit code " + std::to_string(run.code));
  const AnalysisReport r = parse_report(run.json);
  expect(r.n2 && r.n2->state == "limit-exceeded", "state");
  expect(r.n2->high_water > 0 && r.n2->high_water <= 100000, "high-water statistics");
}

void criterion9() {
  for (const char* spec : {"quaternion", "dihedral:8"}) {
    const CliRun run = cli_json({"conjecture", spec, "--q", "3"});
    const AnalysisReport r = parse_report(run.json);
    expect(r.conjecture && r.conjecture->agreement == "agree" && r.conjecture->coset_count == 8,
           std::string(spec) + " at q = 3");
  }
  const CliRun run = cli_json({"conjecture", "extraspecial:2:2", "--q", "2"});
  const AnalysisReport r = parse_report(run.json);
  expect(r.conjecture && r.conjecture->agreement == "agree" && r.conjecture->nilpotency_class == 2 &&
             r.conjecture->isomorphism == false,
         "extraspecial(2, 2) at q = 2");
}

void criterion10() {
  const std::vector<CliRun> first = g_runs;
  expect(!first.empty(), "no recorded runs");
  for (const CliRun& r : first) {
    std::ostringstream out, err;
    const int code = cli::run(r.args, out, err);
    std::string cmd;
    for (const auto& a : r.args) cmd += " " + a;
    expect(code == r.code && out.str() == r.json, "output changed on rerun:" + cmd);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"extraspecial verification", criterion1},
      {"GL/Sigma pipeline", criterion2},
      {"abelian controls", criterion3},
      {"lemma suite", criterion4},
      {"D2 properties", criterion5},
      {"hom counts", criterion6},
      {"H1 consistency", criterion7},
      {"non-closure robustness", criterion8},
      {"conjecture probe", criterion9},
      {"determinism", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << detail << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
