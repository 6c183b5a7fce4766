#include "nqg/report.hpp"

#include <set>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "nqg/error.hpp"

namespace nqg {

using json = nlohmann::json;

namespace {

template <class V> void fields(V& v, GroupSection& s) {
  v("spec", s.spec);
  v("order", s.order);
  v("abelian", s.abelian);
  v("materialized", s.materialized);
  v("conjugacy_classes", s.conjugacy_classes);
  v("nilpotent", s.nilpotent);
  v("nilpotency_class", s.nilpotency_class);
}
template <class V> void fields(V& v, SequenceCertificate& s) {
  v("ids", s.ids);
  v("names", s.names);
  v("c", s.c);
  v("c_order", s.c_order);
  v("nontrivial", s.nontrivial);
}
template <class V> void fields(V& v, ViolationInfo& s) {
  v("i", s.i);
  v("j", s.j);
  v("condition", s.condition);
  v("message", s.message);
}
template <class V> void fields(V& v, StructureInfo& s) {
  v("subgroup_order", s.subgroup_order);
  v("c_order", s.c_order);
  v("derived_is_generated_by_c", s.derived_is_generated_by_c);
  v("c_central", s.c_central);
  v("c_commutes_with_sequence", s.c_commutes_with_sequence);
  v("bilinear", s.bilinear);
}
template <class V> void fields(V& v, EmbeddingInfo& s) {
  v("source", s.source);
  v("degree", s.degree);
  v("symplectic", s.symplectic);
  v("even", s.even);
  v("in_ambient", s.in_ambient);
}
template <class V> void fields(V& v, SymplecticSection& s) {
  v("mode", s.mode);
  v("outcome", s.outcome);
  v("r", s.r);
  v("budget", s.budget);
  v("nodes", s.nodes);
  v("sequence", s.sequence);
  v("violation", s.violation);
  v("structure", s.structure);
  v("embedding", s.embedding);
}
template <class V> void fields(V& v, D2Section& s) {
  v("order", s.order);
  v("derived_order", s.derived_order);
  v("antidiagonal_generation", s.antidiagonal_generation);
  v("projection_kernel", s.projection_kernel);
}
template <class V> void fields(V& v, N2Section& s) {
  v("subject", s.subject);
  v("q", s.q);
  v("state", s.state);
  v("coset_limit", s.coset_limit);
  v("coset_count", s.coset_count);
  v("high_water", s.high_water);
  v("total_defined", s.total_defined);
  v("kernel_order", s.kernel_order);
  v("kernel_is_torsion_free", s.kernel_is_torsion_free);
  v("k_order", s.k_order);
}
template <class V> void fields(V& v, Theorem1Section& s) {
  v("s_order", s.s_order);
  v("d2_order", s.d2_order);
  v("coset_count", s.coset_count);
  v("state", s.state);
  v("epsilon_bar_well_defined", s.epsilon_bar_well_defined);
  v("epsilon_bar_bijective", s.epsilon_bar_bijective);
  v("factorization", s.factorization);
  v("d2_inclusion", s.d2_inclusion);
  v("d2_inclusion_ambient", s.d2_inclusion_ambient);
  v("verdict", s.verdict);
}
template <class V> void fields(V& v, LemmaSection& s) {
  v("checks", s.checks);
  v("k_order", s.k_order);
  v("kernel_order", s.kernel_order);
  v("merge_exhaustive", s.merge_exhaustive);
  v("seed", s.seed);
  v("exponent_min", s.exponent_min);
  v("exponent_max", s.exponent_max);
}
template <class V> void fields(V& v, HomologyEntry& s) {
  v("q", s.q);
  v("degree", s.degree);
  v("rank", s.rank);
  v("torsion", s.torsion);
  v("text", s.text);
}
template <class V> void fields(V& v, H1Section& s) {
  v("from_presentation", s.from_presentation);
  v("from_complex", s.from_complex);
  v("agree", s.agree);
}
template <class V> void fields(V& v, HomCountSection& s) {
  v("n", s.n);
  v("q", s.q);
  v("count", s.count);
}
template <class V> void fields(V& v, ConjectureSection& s) {
  v("q", s.q);
  v("nilpotency_class", s.nilpotency_class);
  v("predicted_isomorphism", s.predicted_isomorphism);
  v("state", s.state);
  v("coset_count", s.coset_count);
  v("high_water", s.high_water);
  v("isomorphism", s.isomorphism);
  v("agreement", s.agreement);
}
template <class V> void fields(V& v, VerdictSection& s) {
  v("value", s.value);
  v("reason", s.reason);
  v("search", s.search);
  v("search_budget", s.search_budget);
  v("search_nodes", s.search_nodes);
  v("coset_limit", s.coset_limit);
  v("enumeration", s.enumeration);
  v("coset_count", s.coset_count);
  v("high_water", s.high_water);
  v("kernel_order", s.kernel_order);
  v("torsion_witness", s.torsion_witness);
  v("torsion_order", s.torsion_order);
}
// `verdict` and `schema` are handled by the top-level functions.
template <class V> void fields(V& v, AnalysisReport& s) {
  v("command", s.command);
  v("group", s.group);
  v("symplectic", s.symplectic);
  v("d2", s.d2);
  v("n2", s.n2);
  v("theorem1", s.theorem1);
  v("lemmas", s.lemmas);
  v("omega", s.omega);
  v("image", s.image);
  v("homology", s.homology);
  v("h1_consistency", s.h1_consistency);
  v("hom_count", s.hom_count);
  v("conjecture", s.conjecture);
}

struct Probe {
  template <class T> void operator()(const char*, T&) {}
};
template <class T> concept Record = requires(Probe& p, T& t) { fields(p, t); };

template <class T> struct is_optional : std::false_type {};
template <class T> struct is_optional<std::optional<T>> : std::true_type {};
template <class T> struct is_vector : std::false_type {};
template <class T> struct is_vector<std::vector<T>> : std::true_type {};
template <class T> struct is_map : std::false_type {};
template <class T> struct is_map<std::map<std::string, T>> : std::true_type {};

template <class T> json to_j(const T& x);

struct Writer {
  json& out;
  template <class T> void operator()(const char* key, const T& x) {
    if constexpr (is_optional<T>::value) {
      if (x) out[key] = to_j(*x);
    } else {
      out[key] = to_j(x);
    }
  }
};

template <class T> json to_j(const T& x) {
  if constexpr (Record<T>) {
    json o = json::object();
    Writer w{o};
    fields(w, const_cast<T&>(x));
    return o;
  } else if constexpr (is_vector<T>::value) {
    json a = json::array();
    for (const auto& e : x) a.push_back(to_j(e));
    return a;
  } else if constexpr (is_map<T>::value) {
    json o = json::object();
    for (const auto& [k, e] : x) o[k] = to_j(e);
    return o;
  } else {
    return json(x);
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("report field " + path + ": " + what);
}

template <class T> void from_j(const json& j, T& x, const std::string& path);

struct Reader {
  const json& in;
  std::string path;
  std::set<std::string> seen;
  template <class T> void operator()(const char* key, T& x) {
    seen.insert(key);
    const std::string sub = path + "." + key;
    if constexpr (is_optional<T>::value) {
      if (!in.contains(key)) {
        x.reset();
        return;
      }
      x.emplace();
      from_j(in.at(key), *x, sub);
    } else {
      if (!in.contains(key)) fail(sub, "missing");
      from_j(in.at(key), x, sub);
    }
  }
  void finish() const {
    for (const auto& item : in.items()) {
      if (!seen.contains(item.key())) fail(path + "." + item.key(), "unknown field");
    }
  }
};

template <class T> void from_j(const json& j, T& x, const std::string& path) {
  if constexpr (Record<T>) {
    if (!j.is_object()) fail(path, "expected an object");
    Reader r{j, path, {}};
    fields(r, x);
    r.finish();
  } else if constexpr (is_vector<T>::value) {
    if (!j.is_array()) fail(path, "expected an array");
    x.clear();
    for (std::size_t i = 0; i < j.size(); ++i) {
      x.emplace_back();
      from_j(j[i], x.back(), path + "[" + std::to_string(i) + "]");
    }
  } else if constexpr (is_map<T>::value) {
    if (!j.is_object()) fail(path, "expected an object");
    x.clear();
    for (const auto& item : j.items()) from_j(item.value(), x[item.key()], path + "." + item.key());
  } else if constexpr (std::is_same_v<T, bool>) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    x = j.get<bool>();
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!j.is_string()) fail(path, "expected a string");
    x = j.get<std::string>();
  } else if constexpr (std::is_unsigned_v<T>) {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
    x = j.get<T>();
  } else {
    static_assert(std::is_integral_v<T>);
    if (!j.is_number_integer()) fail(path, "expected an integer");
    x = j.get<T>();
  }
}

}  // namespace

std::string render_json(const AnalysisReport& r) {
  json j = to_j(r);
  j["schema"] = AnalysisReport::kSchema;
  j["verdict"] = r.verdict ? to_j(*r.verdict) : json(nullptr);
  return j.dump(2) + "\n";
}

AnalysisReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"].get<int>() != AnalysisReport::kSchema) {
    fail("$.schema", "expected 1");
  }
  if (!j.contains("verdict")) fail("$.verdict", "missing");
  AnalysisReport r;
  Reader reader{j, "$", {"schema", "verdict"}};
  fields(reader, r);
  reader.finish();
  if (!j["verdict"].is_null()) {
    r.verdict.emplace();
    from_j(j["verdict"], *r.verdict, "$.verdict");
  }
  return r;
}

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }
std::string yes(const std::optional<bool>& b) { return b ? yes(*b) : "not checked"; }

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto& g = r.group;
  out << "group " << g.spec << ": order " << g.order << ", " << (g.abelian ? "abelian" : "nonabelian");
  if (g.conjugacy_classes) out << ", " << *g.conjugacy_classes << " conjugacy classes";
  if (g.nilpotent) {
    out << ", " << (*g.nilpotent ? "nilpotent of class " + std::to_string(g.nilpotency_class.value_or(0)) : "not nilpotent");
  }
  out << '\n';
  if (r.symplectic) {
    const auto& s = *r.symplectic;
    out << "symplectic " << s.mode << " (r = " << s.r << "): " << s.outcome;
    if (s.nodes) out << " after " << *s.nodes << " nodes";
    if (s.budget) out << " (budget " << *s.budget << ")";
    out << '\n';
    if (s.sequence) {
      const auto& c = *s.sequence;
      for (std::size_t i = 0; i < c.names.size(); ++i) {
        out << "  g" << i + 1 << " = " << c.names[i];
        if (!c.ids.empty()) out << "  [id " << c.ids[i] << "]";
        out << '\n';
      }
      out << "  c = " << c.c << " of order " << c.c_order << (c.nontrivial ? " (nontrivial)" : " (trivial)") << '\n';
    }
    if (s.violation) out << "  violation: " << s.violation->message << '\n';
    if (s.embedding) {
      const auto& e = *s.embedding;
      out << "  image of " << e.source << " on " << e.degree << " points: symplectic " << yes(e.symplectic)
          << ", even " << yes(e.even) << ", in ambient group " << yes(e.in_ambient) << '\n';
    }
    if (s.structure) {
      const auto& t = *s.structure;
      out << "  <sequence> has order " << t.subgroup_order << "; [S,S] = <c>: " << yes(t.derived_is_generated_by_c)
          << "; c central: " << yes(t.c_central) << "; bilinear: " << yes(t.bilinear) << '\n';
    }
  }
  if (r.d2) {
    out << "D2: order " << r.d2->order << " (|[G,G]| = " << r.d2->derived_order << ")";
    out << ", generated by (g, g^-1): " << yes(r.d2->antidiagonal_generation);
    out << ", ker pi_1 = 1 x [G,G]: " << yes(r.d2->projection_kernel) << '\n';
  }
  if (r.n2) {
    const auto& n = *r.n2;
    out << "N_" << n.q << (n.subject == "group" ? "(G)" : "(S)") << ": " << n.state << ", " << n.coset_count
        << " cosets (high water " << n.high_water << ", limit " << n.coset_limit << ", defined "
        << n.total_defined << ")";
    if (n.kernel_order) out << ", kernel order " << *n.kernel_order;
    if (n.k_order) out << ", |k| = " << *n.k_order;
    out << '\n';
  }
  if (r.theorem1) {
    const auto& t = *r.theorem1;
    out << "N_2(S) -> D2(S): " << t.verdict << " (" << t.coset_count << " cosets, |D2(S)| = " << t.d2_order
        << ", |S| = " << t.s_order << ")\n";
  }
  if (r.lemmas) {
    out << "lemmas:";
    for (const auto& [k, v] : r.lemmas->checks) out << ' ' << k << '=' << (v ? "pass" : "FAIL");
    out << " (|k| = " << r.lemmas->k_order << ")\n";
  }
  if (r.image) {
    out << "image of the sequence in N_2(S):";
    for (const auto& [k, v] : *r.image) out << ' ' << k << '=' << yes(v);
    out << '\n';
  }
  if (r.omega) {
    out << "omega_n well defined:";
    for (const auto& [k, v] : *r.omega) out << " n=" << k << ':' << yes(v);
    out << '\n';
  }
  for (const auto& h : r.homology) out << "H_" << h.degree << "(B(" << h.q << ",G)) = " << h.text << '\n';
  if (r.h1_consistency) {
    out << "H_1 from presentation = " << r.h1_consistency->from_presentation.text
        << ", agrees with complex: " << yes(r.h1_consistency->agree) << '\n';
  }
  if (r.hom_count) {
    out << (r.hom_count->q == 2 ? "|Hom(Z^" + std::to_string(r.hom_count->n) + ", G)|"
                                : "class < " + std::to_string(r.hom_count->q) + " " +
                                      std::to_string(r.hom_count->n) + "-tuples")
        << " = " << r.hom_count->count << '\n';
  }
  if (r.conjecture) {
    const auto& c = *r.conjecture;
    out << "conjecture at q = " << c.q << ": class "
        << (c.nilpotency_class ? std::to_string(*c.nilpotency_class) : "none (not nilpotent)")
        << ", predicted N_q(G) = G: " << yes(c.predicted_isomorphism) << "; enumeration " << c.state << " with "
        << c.coset_count << " cosets; " << c.agreement << '\n';
  }
  if (r.verdict) {
    const auto& v = *r.verdict;
    out << "verdict: " << v.value << " (" << v.reason << ")\n";
    if (v.torsion_witness) {
      out << "  torsion witness word of order " << v.torsion_order.value_or(0) << ":";
      for (int l : *v.torsion_witness) out << ' ' << l;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace nqg
