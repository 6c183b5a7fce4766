#include "doctest.h"

#include <random>

#include "nqg/constructions.hpp"
#include "nqg/error.hpp"
#include "nqg/group_ops.hpp"
#include "nqg/symplectic.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nqg;

TEST_CASE("group specs parse and print back") {
  for (const char* text : {"cyclic:5", "dihedral:8", "quaternion", "sym:16", "alt:5", "extraspecial:3:2", "gl:4:2",
                           "product:(cyclic:2),(product:(sym:3),(quaternion))", "perm:(1 2 3);(1 2)",
                           "table:groups/q8.tbl"}) {
    CAPTURE(text);
    CHECK(GroupSpec::parse(text).text() == text);
  }
  CHECK(GroupSpec::parse("product:(cyclic:2),(cyclic:3)").factors.size() == 2);
  for (const char* bad : {"", "cyclic", "cyclic:x", "cyclic:0", "dihedral:7", "extraspecial:4:1", "gl:2:4",
                          "quaternion:2", "product:(cyclic:2)", "product:(cyclic:2),(cyclic:3)x", "perm:",
                          "table:", "klein:4", "sym:3:1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupSpec::parse(bad), InputError);
  }
}

TEST_CASE("orders from specs and from enumeration agree") {
  CHECK(spec_order(GroupSpec::parse("sym:16")) == mpz_class("20922789888000"));
  CHECK(spec_order(GroupSpec::parse("gl:4:2")) == 20160);
  CHECK(spec_order(GroupSpec::parse("extraspecial:3:2")) == 243);
  CHECK_FALSE(spec_order(GroupSpec::parse("table:x.tbl")).has_value());
  for (const char* text : {"cyclic:1", "cyclic:16", "dihedral:2", "dihedral:14", "quaternion", "sym:5", "alt:6",
                           "extraspecial:2:1", "extraspecial:2:3", "extraspecial:5:1", "gl:2:5", "gl:3:2",
                           "product:(alt:4),(cyclic:3)", "perm:(1 2 3 4);(1 2)"}) {
    CAPTURE(text);
    const GroupSpec spec = GroupSpec::parse(text);
    CHECK(mpz_class(static_cast<unsigned long>(build(spec)->order())) == spec_order(spec).value());
  }
}

TEST_CASE("quaternion group") {
  const auto q8 = build("quaternion");
  CHECK(q8->order() == 8);
  CHECK_FALSE(q8->is_abelian());
  CHECK(center(*q8).order() == 2);
  CHECK(conjugacy_classes(*q8).size() == 5);
  std::map<std::size_t, int> orders;
  for (Element x = 0; x < 8; ++x) ++orders[q8->element_order(x)];
  CHECK(orders == std::map<std::size_t, int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("extraspecial groups and their symplectic basis") {
  for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(r);
    const auto e = extraspecial(p, r);
    long long expected = 1;
    for (int k = 0; k < 2 * r + 1; ++k) expected *= p;
    CHECK(static_cast<long long>(e->order()) == expected);
    const auto basis = extraspecial_symplectic_basis(*e);
    REQUIRE(basis.size() == static_cast<std::size_t>(2 * r));
    const auto checked = check_symplectic(*e, basis);
    REQUIRE(std::holds_alternative<SymplecticSequence>(checked));
    const auto& seq = std::get<SymplecticSequence>(checked);
    CHECK(seq.nontrivial);
    CHECK(center(*e).contains(seq.c));
    CHECK(e->element_order(seq.c) == static_cast<std::size_t>(p));
  }
  CHECK(support::invariants(support::as_table(*extraspecial(3, 2))) ==
        support::invariants(oracle::heisenberg(3, 2)));
  CHECK_THROWS_AS(extraspecial_symplectic_basis(*build("sym:3")), InputError);
}

TEST_CASE("heisenberg keys") {
  const auto e = extraspecial(3, 1);
  const int a[] = {1};
  const int b[] = {2};
  const int z[] = {0};
  const Element x = e->find(heisenberg_key(3, a, z, 0)).value();
  const Element y = e->find(heisenberg_key(3, z, b, 0)).value();
  // (1,0,0)(0,2,0) = (1,2,2), (0,2,0)(1,0,0) = (1,2,0)
  CHECK(e->multiply(x, y) == e->find(heisenberg_key(3, a, b, 2)).value());
  CHECK(e->multiply(y, x) == e->find(heisenberg_key(3, a, b, 0)).value());
}

TEST_CASE("elementary matrices in gl(n, p)") {
  const Key k = elementary_matrix_key(3, 5, 1, 3);
  CHECK(k == Key{1, 0, 1, 0, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(elementary_matrix_key(3, 5, 2, 2), InputError);
  CHECK_THROWS_AS(elementary_matrix_key(3, 5, 0, 1), InputError);

  const auto gl = build("gl:4:2");
  CHECK(gl->order() == 20160);
  const auto seq = gl_symplectic_sequence(*gl);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0] == elementary_matrix(*gl, 1, 2));
  CHECK(seq[1] == elementary_matrix(*gl, 1, 3));
  CHECK(seq[2] == elementary_matrix(*gl, 2, 4));
  CHECK(seq[3] == elementary_matrix(*gl, 3, 4));
  CHECK_THROWS_AS(gl_symplectic_sequence(*build("gl:3:2")), InputError);
  CHECK_THROWS_AS(gl_symplectic_sequence(*build("sym:4")), InputError);
}

TEST_CASE("matrix action numbers vectors by p-adic digits") {
  const std::size_t n = 3;
  const int p = 3;
  const Key m = elementary_matrix_key(n, p, 2, 3);
  const Perm act = matrix_action(m, n, p);
  CHECK(act.degree() == 27);
  CHECK(act(0) == 0);
  const oracle::Mat mat(m.begin(), m.end());
  for (int v = 0; v < 27; ++v) {
    int digits[3] = {v % 3, (v / 3) % 3, v / 9};
    int image = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += mat[i * n + j] * digits[j];
      image += (s % p) * scale;
      scale *= p;
    }
    CHECK(act(v) == image);
  }
}

TEST_CASE("gl(4, 2) embeds in sym(16) through even permutations") {
  const auto gl = build("gl:4:2");
  const PermEmbedding emb = embed_gl_in_sym(*gl);
  CHECK(emb.degree == 16);
  REQUIRE(emb.images.size() == gl->order());
  std::set<Perm> distinct(emb.images.begin(), emb.images.end());
  CHECK(distinct.size() == gl->order());
  CHECK(emb.images[kIdentity].is_identity());
  // a transvection over F_2 fixes a hyperplane (8 vectors) and swaps the other
  // 8 in pairs, so every image is a product of even permutations
  bool all_even = true, fixes_zero = true;
  for (const Perm& p : emb.images) {
    all_even = all_even && p.is_even();
    fixes_zero = fixes_zero && p(0) == 0;
  }
  CHECK(all_even);
  CHECK(fixes_zero);
  std::mt19937_64 rng(3);
  bool hom = true;
  for (int k = 0; k < 20000; ++k) {
    const Element a = static_cast<Element>(rng() % gl->order());
    const Element b = static_cast<Element>(rng() % gl->order());
    hom = hom && emb.images[gl->multiply(a, b)] == emb.images[a] * emb.images[b];
  }
  CHECK(hom);
}

TEST_CASE("direct products") {
  const auto g = build("product:(cyclic:2),(cyclic:3)");
  CHECK(g->order() == 6);
  CHECK(g->is_abelian());
  bool has_order_6 = false;
  for (Element x = 0; x < 6; ++x) has_order_6 = has_order_6 || g->element_order(x) == 6;
  CHECK(has_order_6);
  const auto h = build("product:(quaternion),(sym:3)");
  CHECK(h->order() == 48);
  CHECK(center(*h).order() == 2);
  CHECK(support::invariants(support::as_table(*h)) ==
        support::invariants(oracle::product(oracle::quaternion(), oracle::symmetric(3))));
}

TEST_CASE("perm groups") {
  const auto g = perm_group({Perm::from_cycles("(1 2 3 4 5)", 5), Perm::from_cycles("(1 2)", 5)});
  CHECK(g->order() == 120);
  CHECK_THROWS_AS(perm_group({}), InputError);
  CHECK_THROWS_AS(perm_group({Perm::from_cycles("(1 2 3 4 5 6 7 8 9)", 9), Perm::from_cycles("(1 2)", 9)}, 1000),
                  BudgetError);
}
