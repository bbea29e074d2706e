#include <set>

#include "coxtwist/automorphism.hpp"
#include "coxtwist/continuation.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace coxtwist;

namespace {

  GroupElement word(GeometricRep const& rep, std::string const& text) {
    return element(rep, parse_word(rep.diagram(), text));
  }

  CoxeterMatrix stu() {
    return fixtures::make({"s", "t", "u"}, {{"s", "t", "3"}});
  }

  // Reflections of the dihedral group of order 2m as indices j (axis at
  // angle j pi / m); s = 0, t = 1. Can the pair (a, b) be conjugated onto {0, 1}?
  bool dihedral_pair_conjugate_to_generators(int m, int a, int b) {
    auto norm = [m](int j) { return ((j % m) + m) % m; };
    std::set<std::pair<int, int>>    seen{{norm(a), norm(b)}};
    std::vector<std::pair<int, int>> queue{{norm(a), norm(b)}};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [x, y] = queue[h];
      if ((x == 0 && y == 1) || (x == 1 && y == 0)) {
        return true;
      }
      for (int g = 0; g < 2; ++g) {
        // conjugation by the reflection with index g: j -> 2g - j
        std::pair<int, int> next{norm(2 * g - x), norm(2 * g - y)};
        if (seen.insert(next).second) {
          queue.push_back(next);
        }
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("odd components and their extensions") {
  auto a2 = odd_data(dihedral(3), 0);
  CHECK(a2.odd == VertexSet{0, 1});
  CHECK(a2.eodd == VertexSet{0, 1});
  CHECK(a2.own_component == VertexSet{0, 1});
  CHECK(a2.spherical_rest.empty());

  auto inf = odd_data(dihedral_infinite(), 0);
  CHECK(inf.odd == VertexSet{0});
  CHECK(inf.eodd == VertexSet{0});
  CHECK(inf.own_component == VertexSet{0});
  CHECK(inf.spherical_rest.empty());

  auto d = odd_data(stu(), 0);
  CHECK(d.odd == VertexSet{0, 1});
  CHECK(d.eodd == VertexSet{0, 1, 2});
  CHECK(d.own_component == VertexSet{0, 1});
  CHECK(d.spherical_rest == VertexSet{2});
}

TEST_CASE("finite continuation") {
  CHECK(finite_continuation(dihedral(3), 0).generators == VertexSet{0, 1});
  CHECK(finite_continuation(dihedral_infinite(), 0).generators == VertexSet{0});
  CHECK(finite_continuation(stu(), 0).generators == VertexSet{0, 1, 2});
  auto triangle = fixtures::make({"a", "b", "c"}, {{"a", "b", "3"}, {"b", "c", "3"}, {"a", "c", "3"}});
  auto fc       = finite_continuation(triangle, 0);
  CHECK(fc.generators == VertexSet{0});
  CHECK(fc.reflection_rigid);
  CHECK_FALSE(finite_continuation(dihedral_infinite(), 0).reflection_rigid);
  CHECK_THROWS_AS(finite_continuation(fixtures::type_D(4), 0), PreconditionError);
  CHECK_THROWS_AS(finite_continuation(fixtures::path({4, 3}), 0), PreconditionError);
  CHECK_NOTHROW(finite_continuation(fixtures::path({5, 3}), 0));
}

TEST_CASE("graph factors") {
  auto a1a1 = graph_factors(fixtures::make({"a", "b"}, {}));
  CHECK(a1a1 == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{0, 1}});
  auto path = fixtures::path_example();
  auto gf   = graph_factors(path);
  CHECK(std::find(gf.begin(), gf.end(), VertexSet{1, 2}) == gf.end());
  CHECK(graph_factors(dihedral_infinite()) == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}});
}

TEST_CASE("transvections") {
  auto rep = build_rep(stu());
  auto id  = build_transvection(rep, 0, identity_element(rep));
  CHECK(id.verified);
  CHECK(id.images.at("s").matrix == rep.generator(0));

  auto theta = build_transvection(rep, 0, word(rep, "u"));
  CHECK(theta.verified);
  CHECK(theta.images.at("s").matrix == word(rep, "s u").matrix);
  CHECK(theta.images.at("t").matrix == word(rep, "t u").matrix);
  CHECK(theta.images.at("u").matrix == word(rep, "u").matrix);
  CHECK_FALSE(is_reflection(rep, theta.images.at("s")));
  CHECK_THROWS_AS(build_transvection(rep, 0, word(rep, "t")), PreconditionError);

  auto inf = build_rep(dihedral_infinite());
  CHECK(build_transvection(inf, 0, identity_element(inf)).verified);
}

TEST_CASE("the C3 transvection map satisfies the relations") {
  auto M = fixtures::make({"s", "t", "t'", "c"},
                          {{"s", "t", "3"}, {"s", "t'", "3"}, {"c", "t", "4"}, {"c", "t'", "4"},
                           {"t", "t'", "inf"}});
  auto rep  = build_rep(M);
  auto spec = verify_relations(rep,
                               {{"c", word(rep, "c")},
                                {"s", word(rep, "s c")},
                                {"t", word(rep, "s t c s t s")},
                                {"t'", word(rep, "s t' c s t' s")}});
  CHECK(spec.verified);
  CHECK(spec.failures.empty());
  CHECK_FALSE(is_reflection(rep, word(rep, "s c")));

  auto broken = verify_relations(rep, {{"s", word(rep, "s c")}});
  CHECK_FALSE(broken.verified);
}

TEST_CASE("local automorphisms") {
  auto a1a1 = build_rep(fixtures::make({"a", "b"}, {}));
  CHECK(build_local_automorphism(a1a1, VertexSet{0}, {{"a", word(a1a1, "a")}}).verified);
  auto swap = build_local_automorphism(a1a1, VertexSet{0, 1}, {{"a", word(a1a1, "b")}, {"b", word(a1a1, "a")}});
  CHECK(swap.verified);
  auto b2 = build_rep(dihedral(4));
  CHECK(build_local_automorphism(b2, VertexSet{0, 1}, {{"a", word(b2, "b a b")}}).verified);
  CHECK_FALSE(build_local_automorphism(b2, VertexSet{0, 1}, {{"a", word(b2, "a b")}}).verified);
  auto path = build_rep(fixtures::path_example());
  CHECK_THROWS_AS(build_local_automorphism(path, VertexSet{1, 2}, {}), PreconditionError);
  CHECK_THROWS_AS(build_local_automorphism(a1a1, VertexSet{0}, {{"a", word(a1a1, "b")}}),
                  PreconditionError);
}

TEST_CASE("angle deformations") {
  auto b2 = build_rep(dihedral(4));
  auto id = build_angle_deformation(b2, 0, 1, {});
  CHECK(id.verified);
  CHECK(id.images.at("b").matrix == b2.generator(1));
  CHECK(build_angle_deformation(b2, 0, 1, Word{1}).verified);

  auto M   = fixtures::make({"s", "t", "y"}, {{"s", "t", "4"}, {"t", "y", "3"}, {"s", "y", "inf"}});
  auto rep = build_rep(M);
  auto sides = deformation_sides(M, 0, 1);
  CHECK(sides.rest == VertexSet{2});
  CHECK(sides.s_side.empty());
  CHECK(sides.t_side == VertexSet{2});
  auto delta = build_angle_deformation(rep, 0, 1, parse_word(M, "s t"));
  CHECK(delta.verified);
  CHECK(delta.images.at("s").matrix == rep.generator(0));
  CHECK(delta.images.at("t").matrix == word(rep, "s t t t s").matrix);
  CHECK(delta.images.at("y").matrix == word(rep, "s t y t s").matrix);

  auto bad = fixtures::make({"s", "t", "y"}, {{"s", "t", "4"}, {"t", "y", "3"}, {"s", "y", "3"}});
  CHECK_THROWS_AS(build_angle_deformation(build_rep(bad), 0, 1, parse_word(bad, "s t")),
                  PreconditionError);
  CHECK_THROWS_AS(build_angle_deformation(build_rep(dihedral_infinite()), 0, 1, {}),
                  PreconditionError);
  // x = t s in I2(6): x t x^-1 has axis orthogonal to that of s
  auto i6 = build_rep(dihedral(6));
  CHECK_THROWS_AS(build_angle_deformation(i6, 0, 1, Word{1, 0}), PreconditionError);
}

TEST_CASE("sharp-angled pairs") {
  auto a2 = build_rep(fixtures::path({3, 3}, "s"));
  auto yes = is_sharp_angled_pair(a2, word(a2, "s1"), word(a2, "s2"), 4);
  CHECK(yes.answer == SharpAngled::Answer::yes);
  CHECK(yes.witness == Word{});

  auto i6 = build_rep(dihedral(6));
  for (int j = 1; j < 6; ++j) {
    // reflection with index j: (t s)^k t style words built as conjugates
    Word w;
    for (int k = 0; k < j; ++k) {
      w.push_back(k % 2 == 0 ? 1 : 0);
    }
    Word refl = w;
    refl.insert(refl.end(), w.rbegin() + 1, w.rend());
    auto r2     = element(i6, refl);
    auto answer = is_sharp_angled_pair(i6, word(i6, "a"), r2, 8);
    auto root   = is_reflection(i6, r2);
    REQUIRE(root);
    bool expected = dihedral_pair_conjugate_to_generators(6, 0, j);
    if (expected) {
      CHECK(answer.answer == SharpAngled::Answer::yes);
      auto wit = element(i6, *answer.witness);
      auto x   = conjugate(i6, wit, word(i6, "a")).matrix;
      auto y   = conjugate(i6, wit, r2).matrix;
      CHECK(((x == i6.generator(0) && y == i6.generator(1))
             || (x == i6.generator(1) && y == i6.generator(0))));
    } else {
      CHECK(answer.answer == SharpAngled::Answer::no);
    }
  }

  auto inf = build_rep(dihedral_infinite());
  auto vac = is_sharp_angled_pair(inf, word(inf, "a"), word(inf, "b"), 3);
  CHECK(vac.answer == SharpAngled::Answer::yes);
  CHECK(vac.vacuous);
}
