#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "onelight/generators.hpp"
#include "onelight/lightedge.hpp"

using namespace onelight;

TEST_CASE("type thresholds") {
  CHECK(classify_edge(3, 23) == LightType::T3);
  CHECK_FALSE(classify_edge(3, 24).has_value());
  CHECK(classify_edge(4, 4) == LightType::T4);
  CHECK(classify_edge(11, 4) == LightType::T4);
  CHECK_FALSE(classify_edge(4, 12).has_value());
  CHECK(classify_edge(5, 9) == LightType::T5);
  CHECK_FALSE(classify_edge(5, 10).has_value());
  CHECK(classify_edge(6, 8) == LightType::T6);
  CHECK_FALSE(classify_edge(6, 9).has_value());
  CHECK(classify_edge(7, 7) == LightType::T7);
  CHECK_FALSE(classify_edge(7, 8).has_value());
  CHECK_FALSE(classify_edge(8, 8).has_value());
  // Keyed by the smaller endpoint.
  CHECK(classify_edge(3, 7) == LightType::T3);
  CHECK_FALSE(classify_edge(1, 2).has_value());
}

TEST_CASE("classifier is symmetric and complements the heavy list") {
  for (int a = 1; a <= 64; ++a) {
    for (int b = 1; b <= 64; ++b) {
      CHECK(classify_edge(a, b) == classify_edge(b, a));
      if (a >= 3 && b >= 3) CHECK(classify_edge(a, b).has_value() != is_heavy_pair(a, b));
    }
  }
}

TEST_CASE("other profiles") {
  const auto old = Profile::min_degree_four();
  CHECK_FALSE(classify_edge(3, 3, old).has_value());
  CHECK(classify_edge(4, 13, old) == LightType::T4);
  CHECK_FALSE(classify_edge(4, 14, old).has_value());
  const auto sharp = Profile::conjectured();
  CHECK(classify_edge(3, 20, sharp) == LightType::T3);
  CHECK_FALSE(classify_edge(3, 21, sharp).has_value());
  CHECK_FALSE(classify_edge(4, 11, sharp).has_value());
}

TEST_CASE("witness lists") {
  SUBCASE("K5: ten (4,4) edges") {
    const auto ws = find_light_edges(recover_original(catalog("k5-one-crossing")));
    CHECK(ws.size() == 10);
    for (const auto& w : ws) {
      CHECK(w.type == LightType::T4);
      CHECK(w.u < w.v);
    }
  }
  SUBCASE("icosahedron: thirty T5") {
    const auto ws = find_light_edges(recover_original(catalog("icosahedron")));
    CHECK(ws.size() == 30);
    for (const auto& w : ws) CHECK(w.type == LightType::T5);
  }
  SUBCASE("cube with diagonals: twenty-four T6") {
    const auto ws = find_light_edges(recover_original(catalog("cube-diagonals")));
    CHECK(ws.size() == 24);
    for (const auto& w : ws) CHECK((w.type == LightType::T6 && w.degree_u == 6 && w.degree_v == 6));
  }
}

TEST_CASE("verdicts") {
  const auto k5 = verify_theorem(catalog("k5-one-crossing"));
  CHECK(k5.kind == VerdictKind::Witness);
  REQUIRE(k5.witness.has_value());
  CHECK(k5.witness->degree_u == 4);
  CHECK(k5.witness->degree_v == 4);
  CHECK(k5.witness->type == LightType::T4);
  CHECK(k5.min_degree == 4);

  const auto cd = verify_theorem(catalog("cube-diagonals"));
  REQUIRE(cd.witness.has_value());
  CHECK(cd.witness->type == LightType::T6);

  // A path has minimum degree 1.
  const auto path = AssociatedPlaneGraph::from_rotation(RotationSystem{{{1}, {0, 2}, {1}}}, {false, false, false});
  CHECK(verify_theorem(path).kind == VerdictKind::HypothesisUnmet);

  const auto bad = AssociatedPlaneGraph::from_rotation(RotationSystem{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}},
                                                        {false, false, false, true});
  const auto v = verify_theorem(bad);
  CHECK(v.kind == VerdictKind::InvalidInput);
  CHECK_FALSE(v.validation.ok());

  // K4 meets the old profile's hypothesis only in degree 3, which it lacks.
  CHECK(verify_theorem(catalog("k4"), Profile::min_degree_four()).kind == VerdictKind::HypothesisUnmet);
  CHECK(verify_theorem(catalog("octahedron"), Profile::min_degree_four()).kind == VerdictKind::Witness);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(VerdictKind::Witness)) == "WITNESS");
  CHECK(std::string(to_string(VerdictKind::HypothesisUnmet)) == "HYPOTHESIS-UNMET");
  CHECK(std::string(to_string(VerdictKind::CounterexampleCandidate)) == "COUNTEREXAMPLE-CANDIDATE");
}
