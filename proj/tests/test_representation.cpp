#include <random>

#include "coxtwist/classify.hpp"
#include "coxtwist/representation.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace coxtwist;

namespace {

  GroupElement word(GeometricRep const& rep, std::string const& text) {
    return element(rep, parse_word(rep.diagram(), text));
  }

}  // namespace

TEST_CASE("bilinear form values") {
  auto r3 = build_rep(dihedral(3));
  CHECK(r3.bilinear(0, 1) == CycNumber(r3.ring(), r3.ring()->constant(-1), 2));
  CHECK(r3.bilinear(0, 0) == CycNumber::integer(r3.ring(), 1));
  auto ri = build_rep(dihedral_infinite());
  CHECK(ri.bilinear(0, 1) == CycNumber::integer(ri.ring(), -1));
  auto r5 = build_rep(dihedral(5));
  auto B  = r5.bilinear(0, 1);
  auto R  = r5.ring();
  CHECK((CycNumber::integer(R, 4) * B * B + CycNumber::integer(R, 2) * B
         - CycNumber::integer(R, 1))
            .is_zero());
}

TEST_CASE("generators preserve the form and satisfy the relations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto M   = fixtures::random_diagram(rng, 2 + trial % 4, {2, 3, 4, 5, 6, 0});
    auto rep = build_rep(M);
    for (std::size_t i = 0; i < M.rank(); ++i) {
      auto const& g = rep.generator(i);
      CHECK((g * g).is_identity());
      CHECK(g.transpose() * rep.gram2() * g == rep.gram2());
      for (std::size_t j = 0; j < M.rank(); ++j) {
        if (i != j && M.label(i, j).is_finite()) {
          auto o = order_of_product(rep, element(rep, Word{i}), element(rep, Word{j}));
          CHECK(o == Order::finite(static_cast<std::uint64_t>(M.label(i, j).value())));
        }
      }
    }
  }
}

TEST_CASE("modulus cap") {
  auto M = dihedral(7);
  M.add_vertex("c");
  M.set_label(1, 2, Label(9));
  CHECK_THROWS_AS(build_rep(M), ArithmeticLimit);
  CHECK_NOTHROW(build_rep(M, OracleOptions{.max_modulus = 252}));
}

TEST_CASE("elements from words") {
  auto rep = build_rep(dihedral(3));
  CHECK(word(rep, "-").matrix.is_identity());
  CHECK(word(rep, "a a").matrix.is_identity());
  auto aba = word(rep, "a b a");
  auto root = is_reflection(rep, aba);
  REQUIRE(root);
  // a b (alpha_a) = alpha_b up to the reflection; a(alpha_b) = alpha_a + alpha_b
  CHECK((*root)[0] == CycNumber::integer(rep.ring(), 1));
  CHECK((*root)[1] == CycNumber::integer(rep.ring(), 1));
  CHECK(word(rep, "a b a").matrix == word(rep, "b a b").matrix);
  CHECK_THROWS_AS(word(rep, "a z"), UnknownVertex);
  CHECK_THROWS(word(rep, "a -"));
}

TEST_CASE("reflections") {
  auto rep = build_rep(fixtures::make({"s", "t", "u"}, {{"s", "t", "3"}}));
  CHECK(is_reflection(rep, word(rep, "s")));
  CHECK_FALSE(is_reflection(rep, word(rep, "s u")));
  CHECK_FALSE(is_reflection(rep, word(rep, "-")));
  CHECK_FALSE(is_reflection(rep, word(rep, "s t")));

  std::mt19937_64 rng(23);
  auto M  = fixtures::path({3, 4, 0});
  auto r2 = build_rep(M);
  std::uniform_int_distribution<std::size_t> letter(0, M.rank() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    Word w;
    for (int k = 0; k < trial % 6; ++k) {
      w.push_back(letter(rng));
    }
    auto g = conjugate(r2, element(r2, w), element(r2, Word{letter(rng)}));
    CHECK(is_reflection(r2, g));
  }
}

TEST_CASE("orders of products against the permutation model of A3") {
  auto M   = fixtures::path({3, 3}, "s");
  auto rep = build_rep(M);
  auto o   = order_of_product(rep, word(rep, "s1"), word(rep, "s2 s3 s2"));
  // s_i = (i, i+1) on {0,1,2,3}
  std::vector<fixtures::Perm> gens = {fixtures::transposition(4, 0, 1),
                                      fixtures::transposition(4, 1, 2),
                                      fixtures::transposition(4, 2, 3)};
  auto conj = fixtures::compose(gens[1], fixtures::compose(gens[2], gens[1]));
  CHECK(o == Order::finite(fixtures::perm_order(fixtures::compose(gens[0], conj))));
  CHECK(o == Order::finite(3));
  CHECK(order_of_product(rep, word(rep, "s1"), word(rep, "s3")) == Order::finite(2));
  CHECK(order_of_product(rep, word(rep, "s1"), word(rep, "s1")) == Order::finite(1));
  CHECK_THROWS_AS(order_of_product(rep, word(rep, "s1 s2"), word(rep, "s1")), PreconditionError);

  auto inf = build_rep(dihedral_infinite());
  CHECK(order_of_product(inf, word(inf, "a"), word(inf, "b")).is_infinite());
  CHECK(order_of_product(inf, word(inf, "a"), word(inf, "b a b")).is_infinite());
}

TEST_CASE("element orders") {
  auto rep = build_rep(fixtures::path({3, 3}, "s"));
  CHECK(element_order(rep, word(rep, "s1 s2 s3"), 100) == Order::finite(4));
  auto inf = build_rep(fixtures::path({3, 0}));
  CHECK(element_order(inf, word(inf, "x2 x3"), 100).is_infinite());
  CHECK(element_order(inf, word(inf, "x1 x2"), 100) == Order::finite(3));
}

TEST_CASE("longest elements") {
  auto a1 = build_rep(CoxeterMatrix({"a"}));
  CHECK(longest_element(a1, VertexSet{0}).word == Word{0});
  auto a2 = build_rep(dihedral(3));
  CHECK(longest_element(a2, VertexSet{0, 1}).word->size() == 3);
  auto i5 = build_rep(dihedral(5));
  CHECK(longest_element(i5, VertexSet{0, 1}).word->size() == 5);
  auto h3 = build_rep(fixtures::path({5, 3}));
  CHECK(longest_element(h3, VertexSet::all(3)).word->size() == 15);
  CHECK(longest_element(h3, VertexSet::all(3)).matrix == CycMatrix::identity(h3.ring(), 3).scaled(-1));
  CHECK_THROWS_AS(longest_element(build_rep(dihedral_infinite()), VertexSet{0, 1}), PreconditionError);
}

TEST_CASE("centres of spherical subgroups") {
  auto a1 = build_rep(CoxeterMatrix({"a"}));
  auto c1 = center_of_spherical(a1, VertexSet{0});
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].matrix == a1.generator(0));
  CHECK(center_of_spherical(build_rep(dihedral(3)), VertexSet{0, 1}).empty());
  auto b2 = build_rep(dihedral(4));
  auto c2 = center_of_spherical(b2, VertexSet{0, 1});
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].matrix == word(b2, "a b a b").matrix);
  auto a1a1 = build_rep(fixtures::make({"a", "b"}, {}));
  CHECK(center_of_spherical(a1a1, VertexSet{0, 1}).size() == 3);
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(build_rep(dihedral(3)), 2000).elements.size() == 6);
  CHECK(enumerate_group(build_rep(dihedral(5)), 2000).elements.size() == 10);
  auto a3 = enumerate_group(build_rep(fixtures::path({3, 3})), 2000);
  CHECK_FALSE(a3.truncated);
  CHECK(a3.elements.size()
        == fixtures::group_size({fixtures::transposition(4, 0, 1),
                                 fixtures::transposition(4, 1, 2),
                                 fixtures::transposition(4, 2, 3)}));
  CHECK(enumerate_group(build_rep(fixtures::path({4, 3})), 2000).elements.size() == 48);
  CHECK(enumerate_group(build_rep(fixtures::path({5, 3})), 2000).elements.size() == 120);
  auto inf = enumerate_group(build_rep(dihedral_infinite()), 50);
  CHECK(inf.truncated);
  CHECK(inf.elements.size() == 50);
}

TEST_CASE("large traces prove infinite order before the power bound") {
  auto const M = fixtures::make({"a", "b", "c"}, {{"a", "b", "inf"}, {"b", "c", "inf"}, {"a", "c", "inf"}});
  auto const rep = build_rep(M);
  auto const g   = element(rep, Word{0, 1, 2});
  // Far below the finite-order bound, so only the trace can decide.
  CHECK(element_order(rep, g, 4) == Order::infinite());
  // An infinite dihedral product is unipotent: trace equals the rank.
  CHECK(element_order(rep, element(rep, Word{0, 1}), 1) == Order::unknown());
  // Finite-order elements are never misjudged by the trace.
  auto const h3 = build_rep(fixtures::make({"a", "b", "c"}, {{"a", "b", "5"}, {"b", "c", "3"}}));
  auto const e  = enumerate_group(h3, 200);
  REQUIRE(e.elements.size() == 120);
  for (auto const& x : e.elements) {
    CHECK(element_order(h3, x, 1000).is_finite());
  }
}
