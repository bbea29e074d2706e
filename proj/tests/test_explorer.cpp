#include <random>

#include "coxtwist/canonical.hpp"
#include "coxtwist/explorer.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace coxtwist;

namespace {

  using Answer = Verdict::Answer;

  // Answers grouped by what they claim, ignoring conditionality.
  int answer_class(Answer a) {
    switch (a) {
      case Answer::isomorphic:
      case Answer::conditionally_isomorphic:
        return 0;
      case Answer::not_isomorphic:
      case Answer::conditionally_not_isomorphic:
        return 1;
      case Answer::inconclusive:
        return 2;
    }
    return 2;
  }

  CoxeterMatrix a2_times_a1() {
    return fixtures::make({"p", "q", "r"}, {{"p", "q", "3"}});
  }

  CoxeterMatrix h3() {
    return fixtures::make({"a", "b", "c"}, {{"a", "b", "5"}, {"b", "c", "3"}});
  }

}  // namespace

TEST_CASE("twist classes of the basic examples") {
  auto const single = twist_class(dihedral(3));
  CHECK(single.members.size() == 1);
  CHECK_FALSE(single.truncated);
  CHECK(single.edges.empty());

  auto const path = fixtures::path_example();
  auto const C    = twist_class(path);
  CHECK(C.members.size() >= 2);
  CHECK_FALSE(C.truncated);
  auto star = C.find(fixtures::star_example());
  REQUIRE(star.has_value());
  CHECK(C.path_to(*star).size() >= 1);
  CHECK(verify_class(C));
  for (auto const& m : C.members) {
    CHECK(m.diagram.rank() == path.rank());
    CHECK(label_multiset(m.diagram) == label_multiset(path));
  }
  CHECK(C.find(path) == std::optional<std::size_t>(0));
}

TEST_CASE("twist classes stop at the cap") {
  ExplorerOptions tight;
  tight.cap = 1;
  auto const C = twist_class(fixtures::path_example(), tight);
  CHECK(C.truncated);
  CHECK(C.members.size() == 1);
}

TEST_CASE("right-angled twist classes are rigid") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto const M   = fixtures::random_diagram(rng, 3 + trial % 4, {2, 0});
    auto const key = canonical_form(M).key();
    auto const C   = twist_class(M);
    CHECK(C.members.size() == 1);
    for (auto const& m : C.members) {
      CHECK(m.key == key);
    }
  }
}

TEST_CASE("classes of random diagrams replay from the seed") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto const M = fixtures::random_diagram(rng, 4 + trial % 2, {2, 3, 4, 0, 0, 0});
    auto const C = twist_class(M);
    CHECK(verify_class(C));
    for (auto const& m : C.members) {
      CHECK(label_multiset(m.diagram) == label_multiset(M));
    }
  }
}

TEST_CASE("twist equivalence certificates") {
  auto const path = fixtures::path_example();
  auto const star = fixtures::star_example();
  auto       eq   = twist_equivalent(path, star);
  REQUIRE(eq.kind == Equivalence::Kind::equivalent);
  REQUIRE(eq.certificate.has_value());
  CHECK(eq.certificate->moves.size() == 1);
  CHECK(eq.certificate->moves[0].kind == MoveRecord::Kind::twist);
  CHECK(verify_certificate(path, star, *eq.certificate));

  std::mt19937_64 rng(3);
  auto const      shuffled = fixtures::shuffled(rng, path);
  auto            same     = twist_equivalent(path, shuffled);
  REQUIRE(eq.kind == Equivalence::Kind::equivalent);
  CHECK(same.certificate->moves.empty());
  CHECK(is_isomorphism(path, shuffled, same.certificate->final_iso));

  auto differ = twist_equivalent(dihedral(3), dihedral(4));
  CHECK(differ.kind == Equivalence::Kind::not_equivalent);
  CHECK(differ.reason == "label multisets differ");

  // Same labels, different graphs, no twists at all.
  auto const tri  = fixtures::make({"a", "b", "c"}, {{"a", "b", "3"}, {"b", "c", "inf"}});
  auto const tri2 = fixtures::make({"a", "b", "c"}, {{"a", "b", "3"}, {"a", "c", "inf"}, {"b", "c", "2"}});
  CHECK(twist_equivalent(tri, tri).kind == Equivalence::Kind::equivalent);
  CHECK(twist_equivalent(tri, tri2).kind == Equivalence::Kind::equivalent);

  ExplorerOptions tight;
  tight.cap = 1;
  CHECK(twist_equivalent(path, star, tight).kind == Equivalence::Kind::unknown);
}

TEST_CASE("a tampered certificate fails replay") {
  auto const path = fixtures::path_example();
  auto const star = fixtures::star_example();
  auto       cert = *twist_equivalent(path, star).certificate;
  auto       bad  = cert;
  bad.moves.clear();
  CHECK_FALSE(verify_certificate(path, star, bad));
  bad = cert;
  std::swap(bad.final_iso.mapping["s1"], bad.final_iso.mapping["s2"]);
  CHECK_FALSE(verify_certificate(path, star, bad));
  bad = cert;
  bad.moves.push_back(MoveRecord::parse("twist J={s9} K={s1}"));
  CHECK_FALSE(verify_certificate(path, star, bad));
}

TEST_CASE("isomorphism verdicts on the reference examples") {
  auto const split = decide_isomorphism(dihedral(6), a2_times_a1());
  CHECK(split.answer == Answer::isomorphic);
  CHECK(split.unconditional);
  CHECK(split.precondition == "both");
  REQUIRE(split.certificate.has_value());
  CHECK(split.certificate->moves.size() == 1);
  CHECK(split.certificate->moves[0].kind == MoveRecord::Kind::reduction);
  CHECK(verify_certificate(dihedral(6), a2_times_a1(), *split.certificate));

  auto const twisted = decide_isomorphism(fixtures::path_example(), fixtures::star_example());
  CHECK(twisted.answer == Answer::isomorphic);
  REQUIRE(twisted.certificate.has_value());
  CHECK(twisted.certificate->moves.size() == 1);

  auto const apart = decide_isomorphism(dihedral(3), dihedral(6));
  CHECK(apart.answer == Answer::not_isomorphic);
  CHECK(apart.reduced_first.rank() == 2);
  CHECK(apart.reduced_second.rank() == 3);

  auto const other = decide_isomorphism(dihedral(3), dihedral(4));
  CHECK(other.answer == Answer::not_isomorphic);
}

TEST_CASE("rank 3 spherical subdiagrams make verdicts conditional") {
  std::mt19937_64 rng(2);
  auto const      v = decide_isomorphism(h3(), fixtures::shuffled(rng, h3()));
  CHECK(v.answer == Answer::conditionally_isomorphic);
  CHECK_FALSE(v.unconditional);
  CHECK(v.precondition == "none");

  auto const a3 = fixtures::path({3, 3});
  auto const w  = decide_isomorphism(a3, h3());
  CHECK(w.answer == Answer::conditionally_not_isomorphic);

  // Only the second input satisfies the precondition.
  auto const x = decide_isomorphism(a3, dihedral(3));
  CHECK(x.answer == Answer::not_isomorphic);
  CHECK(x.precondition == "second");
  auto const y = decide_isomorphism(dihedral(3), a3);
  CHECK(y.answer == Answer::not_isomorphic);
  CHECK(y.precondition == "first");
}

TEST_CASE("truncation gives an inconclusive verdict") {
  ExplorerOptions tight;
  tight.cap = 1;
  auto const v = decide_isomorphism(fixtures::path_example(), fixtures::star_example(), tight);
  CHECK(v.answer == Answer::inconclusive);
  CHECK_FALSE(v.unconditional);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("verdicts are symmetric and invariant under relabelling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto const n = 3 + trial % 3;
    auto const M = fixtures::random_diagram(rng, n, {2, 3, 4, 6, 0, 0});
    auto const N = fixtures::random_diagram(rng, n, {2, 3, 4, 6, 0, 0});
    auto const vmn = decide_isomorphism(M, N);
    auto const vnm = decide_isomorphism(N, M);
    CHECK(answer_class(vmn.answer) == answer_class(vnm.answer));
    CHECK(vmn.unconditional == vnm.unconditional);

    auto const P = fixtures::shuffled(rng, M);
    auto const self = decide_isomorphism(M, P);
    CHECK(answer_class(self.answer) == 0);
    REQUIRE(self.certificate.has_value());
    CHECK(verify_certificate(M, P, *self.certificate));
  }
}

TEST_CASE("certificate and verdict JSON") {
  auto const v = decide_isomorphism(dihedral(6), a2_times_a1());
  auto const j = to_json(v);
  CHECK(j.at("answer") == "Isomorphic");
  CHECK(j.at("unconditional") == true);
  CHECK(j.at("certificate").at("moves").size() == 1);
  auto const back = certificate_from_json(j.at("certificate"));
  CHECK(back.moves == v.certificate->moves);
  CHECK(back.final_iso == v.certificate->final_iso);
  CHECK(back.target_reductions == v.certificate->target_reductions);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), Error);

  auto const none = to_json(decide_isomorphism(dihedral(3), dihedral(4)));
  CHECK(none.at("certificate").is_null());
  CHECK(none.at("answer") == "NotIsomorphic");
}

TEST_CASE("class export") {
  auto const C   = twist_class(fixtures::path_example());
  auto const dot = to_dot(C);
  CHECK(dot.rfind("graph twist_class {", 0) == 0);
  CHECK(dot.find("m0 -- m") != std::string::npos);
  CHECK(dot.find("label=\"twist\"") != std::string::npos);
  auto const j = to_json(C);
  CHECK(j.at("size") == C.members.size());
  CHECK(j.at("members")[0].at("parent").is_null());
  CHECK(to_dot(C) == dot);
}
