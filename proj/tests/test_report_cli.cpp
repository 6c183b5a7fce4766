#include "doctest.h"

#include <sstream>

#include "nqg/cli.hpp"
#include "nqg/constructions.hpp"
#include "nqg/error.hpp"
#include "nqg/report.hpp"

using namespace nqg;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

AnalysisReport sample_report() {
  AnalysisReport r;
  r.command = "verdict";
  r.group = {"extraspecial:2:2", "32", false, true, 17, true, 2};
  SymplecticSection s;
  s.mode = "find";
  s.outcome = "found";
  s.r = 2;
  s.budget = 1000;
  s.nodes = 12;
  s.sequence = SequenceCertificate{{1, 2, 3, 4}, {"a", "b", "c", "d"}, "z", 2, true};
  r.symplectic = s;
  r.d2 = D2Section{64, 2, true, true};
  N2Section n2;
  n2.subject = "group";
  n2.state = "closed";
  n2.coset_count = 64;
  n2.kernel_order = 2;
  r.n2 = n2;
  r.homology.push_back(HomologyEntry{2, 1, 0, {"2", "4"}, "Z/2 + Z/4"});
  r.omega = std::map<std::string, bool>{{"-1", true}, {"2", true}};
  VerdictSection v;
  v.value = "NOT_K_PI_1";
  v.reason = "symplectic-sequence";
  v.search = "found";
  v.torsion_witness = std::vector<int>{1, -2};
  r.verdict = v;
  return r;
}

}  // namespace

TEST_CASE("reports round-trip through JSON") {
  const AnalysisReport r = sample_report();
  const std::string json = render_json(r);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  const AnalysisReport back = parse_report(json);
  CHECK(back == r);
  CHECK(render_json(back) == json);

  AnalysisReport bare;
  bare.command = "info";
  bare.group.spec = "cyclic:5";
  bare.group.order = "5";
  const std::string bare_json = render_json(bare);
  CHECK(bare_json.find("\"verdict\": null") != std::string::npos);
  CHECK(parse_report(bare_json) == bare);
}

TEST_CASE("the strict reader rejects malformed reports") {
  const std::string json = render_json(sample_report());
  std::string unknown = json;
  unknown.insert(unknown.find('{') + 1, "\"bogus\": 1,");
  CHECK_THROWS_AS(parse_report(unknown), InputError);

  std::string nested = json;
  nested.insert(nested.find("\"d2\": {") + 7, "\"extra\": true,");
  CHECK_THROWS_AS(parse_report(nested), InputError);

  std::string no_schema = json;
  const auto pos = no_schema.find("\"schema\": 1,");
  REQUIRE(pos != std::string::npos);
  no_schema.erase(pos, std::string("\"schema\": 1,").size());
  CHECK_THROWS_AS(parse_report(no_schema), InputError);

  std::string wrong_schema = json;
  wrong_schema.replace(wrong_schema.find("\"schema\": 1"), 11, "\"schema\": 2");
  CHECK_THROWS_AS(parse_report(wrong_schema), InputError);

  CHECK_THROWS_AS(parse_report("not json"), InputError);
  CHECK_THROWS_AS(parse_report("{\"schema\": 1}"), InputError);
}

TEST_CASE("info") {
  const Run q = run({"info", "quaternion", "--json"});
  CHECK(q.code == cli::kExitOk);
  const AnalysisReport r = parse_report(q.out);
  CHECK(r.group.order == "8");
  CHECK_FALSE(r.group.abelian);
  CHECK(r.group.conjugacy_classes == 5);
  CHECK_FALSE(r.verdict.has_value());

  const Run c = run({"info", "cyclic:5", "--json"});
  CHECK(parse_report(c.out).group.abelian);

  const Run big = run({"info", "sym:16", "--json"});
  CHECK(big.code == cli::kExitOk);
  CHECK(parse_report(big.out).group.order == "20922789888000");
  CHECK_FALSE(parse_report(big.out).group.materialized);

  const Run text = run({"info", "quaternion"});
  CHECK(text.code == cli::kExitOk);
  CHECK_FALSE(text.out.empty());
}

TEST_CASE("input errors exit with 1") {
  CHECK(run({"info", "table:/nonexistent/q8.tbl"}).code == cli::kExitInputError);
  CHECK(run({"info", "klein:4"}).code == cli::kExitInputError);
  CHECK(run({"info"}).code == cli::kExitInputError);
  CHECK(run({"frobnicate", "cyclic:3"}).code == cli::kExitInputError);
  CHECK(run({"symplectic", "check", "extraspecial:2:2", "--ids", "0", "1", "2", "3"}).code == cli::kExitInputError);
  CHECK(run({"homology", "sym:3", "--dim", "5"}).code == cli::kExitInputError);
  const Run err = run({"info", "dihedral:7"});
  CHECK_FALSE(err.err.empty());
}

TEST_CASE("symplectic subcommands") {
  const auto e = extraspecial(2, 2);
  std::vector<std::string> args = {"symplectic", "check", "extraspecial:2:2", "--json", "--ids"};
  for (Element x : extraspecial_symplectic_basis(*e)) args.push_back(std::to_string(x));
  const Run c = run(args);
  CHECK(c.code == cli::kExitOk);
  const AnalysisReport r = parse_report(c.out);
  REQUIRE(r.symplectic);
  CHECK(r.symplectic->outcome == "valid");
  REQUIRE(r.symplectic->sequence);
  CHECK(r.symplectic->sequence->nontrivial);

  const Run none = run({"symplectic", "find", "quaternion", "--r", "2", "--json"});
  CHECK(parse_report(none.out).symplectic->outcome == "exhausted-none");

  const Run gl = run({"symplectic", "find", "sym:16", "--seed-gl", "--json"});
  CHECK(gl.code == cli::kExitOk);
  const AnalysisReport g = parse_report(gl.out);
  REQUIRE(g.symplectic);
  CHECK(g.symplectic->outcome == "found");
  REQUIRE(g.symplectic->embedding);
  CHECK(g.symplectic->embedding->even);
  CHECK(g.symplectic->embedding->in_ambient);
  REQUIRE(g.theorem1);
  CHECK(g.theorem1->verdict == "PASS");
}

TEST_CASE("exit codes follow the outcome") {
  const Run k = run({"verdict", "cyclic:12", "--json"});
  CHECK(k.code == cli::kExitOk);
  CHECK(parse_report(k.out).verdict->value == "K_PI_1");

  const Run n = run({"n2", "sym:3", "--limit", "20000", "--json"});
  CHECK(n.code == cli::kExitInconclusive);
  const AnalysisReport nr = parse_report(n.out);
  REQUIRE(nr.n2);
  CHECK(nr.n2->state == "limit-exceeded");
  CHECK(nr.n2->high_water > 0);

  const Run i = run({"verdict", "sym:3", "--budget", "1000", "--limit", "5000", "--json"});
  CHECK(i.code == cli::kExitInconclusive);
  CHECK(parse_report(i.out).verdict->value == "INCONCLUSIVE");
}

TEST_CASE("homology, hom-count and conjecture commands") {
  const Run h = run({"homology", "quaternion", "--dim", "1", "--json"});
  CHECK(h.code == cli::kExitOk);
  const AnalysisReport hr = parse_report(h.out);
  REQUIRE(hr.homology.size() == 2);
  CHECK(hr.homology[1].text == "Z/2 + Z/2 + Z/4");
  REQUIRE(hr.h1_consistency);
  CHECK(hr.h1_consistency->agree);

  const Run c = run({"hom-count", "sym:3", "--n", "2", "--json"});
  CHECK(parse_report(c.out).hom_count->count == "18");

  const Run j = run({"conjecture", "quaternion", "--q", "3", "--json"});
  CHECK(j.code == cli::kExitOk);
  CHECK(parse_report(j.out).conjecture->agreement == "agree");
}

TEST_CASE("identical invocations give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"verdict", "extraspecial:2:2", "--json"},
                                                                {"homology", "sym:3", "--json"},
                                                                {"n2", "sym:3", "--limit", "3000", "--json"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
