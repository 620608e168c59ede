#include <catch2/catch_amalgamated.hpp>

#include <cmtkit/classify.hpp>
#include <cmtkit/generators.hpp>

#include "test_support.hpp"

using namespace cmt;
using testing::cx;
using testing::face_of;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);

SimplicialComplex two_points_xy() {
  const std::vector<Face> points = {Face::of({0}), Face::of({1})};
  return SimplicialComplex::from_facets(points, {}, {"x", "y"});
}

} // namespace

TEST_CASE("purity", "[classify]") {
  CHECK(is_pure(cx({{1, 2}, {3, 4}})));
  CHECK_FALSE(is_pure(cx({{1, 2, 3}, {4, 5}})));
  CHECK(is_pure(SimplicialComplex::irrelevant()));
  CHECK_THROWS_AS(is_pure(SimplicialComplex()), Error);
}

TEST_CASE("Cohen-Macaulay examples", "[classify]") {
  const auto edge_glued = cx({{1, 2, 3}, {2, 3, 4}});
  CHECK(oracle::is_cm(testing::to_oracle(edge_glued), 2));
  CHECK(is_cm(edge_glued, gf2));

  const auto vertex_glued = cx({{1, 2, 3}, {3, 4, 5}});
  const auto verdict = check_cm(vertex_glued, gf2);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.face);
  CHECK(*verdict.face == face_of(vertex_glued, {3}));

  CHECK(is_cm(gen::simplex(5), gf2));
  CHECK(is_cm(SimplicialComplex::irrelevant(), gf2));
  CHECK_FALSE(check_cm(cx({{1, 2, 3}, {4, 5}}), gf2).holds);
  CHECK(check_cm_t(cx({{1, 2, 3}, {4, 5}}), 1, gf2).impure);
  CHECK_THROWS_AS(is_cm(SimplicialComplex(), gf2), Error);
}

TEST_CASE("CM_t examples", "[classify]") {
  const auto vertex_glued = cx({{1, 2, 3}, {3, 4, 5}});
  for (auto criterion : kAllCriteria) {
    CHECK(is_cm_t(vertex_glued, 2, gf2, criterion));
    CHECK_FALSE(is_cm_t(vertex_glued, 1, gf2, criterion));
    CHECK(is_cm_t(gen::boundary_simplex(4), 5, gf2, criterion));
    CHECK(is_cm_t(gen::miyazaki_example().complex, 0, gf2, criterion));
  }
  CHECK(is_cm_t(vertex_glued, -3, gf2) == is_cm(vertex_glued, gf2));
  // Witnesses point at the face whose link has the offending homology.
  for (int t : {0, 1}) {
    const auto v = check_cm_t(vertex_glued, t, gf2);
    REQUIRE(v.face);
    CHECK(*v.face == face_of(vertex_glued, {3}));
  }
  CHECK(is_buchsbaum(gen::cycle(5), gf2));
  CHECK(is_buchsbaum(vertex_glued, gf2) == false);
}

TEST_CASE("k-CM_t examples", "[classify]") {
  const auto tet = gen::boundary_simplex(4);
  CHECK(is_k_cm_t(tet, 2, 0, gf2));
  const auto three = check_k_cm_t(tet, 3, 0, gf2);
  CHECK_FALSE(three.holds);
  CHECK(three.dimension_drop);
  REQUIRE(three.removed);
  CHECK(three.removed->size() == 2);

  const auto full = gen::simplex(4);
  CHECK(is_k_cm_t(full, 1, 0, gf2));
  CHECK_FALSE(is_k_cm_t(full, 2, 0, gf2));

  const auto base = gen::miyazaki_base();
  CHECK(is_k_cm_t(base, 2, 1, gf2));
  CHECK(is_k_buchsbaum(base, 2, gf2));
  CHECK_FALSE(is_k_cm_t(base, 2, 0, gf2));

  // The library and the brute-force oracle agree on these.
  for (const auto& c : {tet, full, base, gen::cycle(5)})
    for (std::size_t k = 1; k <= 3; ++k)
      for (int t = 0; t <= 2; ++t)
        CHECK(is_k_cm_t(c, k, t, gf2) ==
              oracle::is_k_cm_t(testing::to_oracle(c), static_cast<int>(k), t, 2));
}

TEST_CASE("k-CM_t argument errors", "[classify]") {
  const auto tet = gen::boundary_simplex(4);
  CHECK_THROWS_WITH(is_k_cm_t(tet, 0, 0, gf2), "k must be positive");
  CHECK_NOTHROW(is_k_cm_t(tet, 5, 0, gf2));
  CHECK_THROWS_WITH(is_k_cm_t(tet, 6, 0, gf2), "k exceeds vertex budget");
  CHECK(is_k_cm_t_saturated(tet, 6, 0, gf2) == is_k_cm_t(tet, 5, 0, gf2));
  CHECK_THROWS_AS(is_k_cm_t(SimplicialComplex(), 1, 0, gf2), Error);
}

TEST_CASE("min_t", "[classify]") {
  CHECK(min_t(cx({{1, 2, 3}, {3, 4, 5}}), gf2) == 2);
  CHECK(min_t(gen::boundary_simplex(4), gf2) == 0);
  CHECK(min_t(cx({{1, 2, 3, 4}, {4, 5, 6, 7}}), gf2) == 2);
  CHECK(min_t(SimplicialComplex::irrelevant(), gf2) == 0);
  CHECK_THROWS_WITH(min_t(cx({{1, 2, 3}, {4, 5}}), gf2),
                    "min_t undefined for impure complexes");
}

TEST_CASE("max_k", "[classify]") {
  CHECK(max_k(gen::cycle(5), 0, gf2) == 2);
  CHECK(max_k(gen::boundary_simplex(4), 0, gf2) == 2);
  CHECK(max_k(gen::simplex(4), 0, gf2) == 1);
  CHECK_THROWS_WITH(max_k(cx({{1, 2, 3}, {3, 4, 5}}), 1, gf2), "not CM_t");

  // Two disjoint points: any W of size < #V+1 leaves a nonempty 0-dimensional complex.
  const auto pts = cx({{1}, {2}});
  CHECK(max_k(pts, 0, gf2) == 2);
}

TEST_CASE("classification reports", "[classify]") {
  const auto r = classify(cx({{1, 2, 3}, {3, 4, 5}}), gf2);
  CHECK(r.pure);
  CHECK(r.min_t == 2);
  CHECK(r.criteria_agree);
  CHECK(r.dimension == 2);
  CHECK(r.cm_t.at(0) == false);
  CHECK(r.cm_t.at(2) == true);

  const auto impure = classify(cx({{1, 2, 3}, {4, 5}}), gf2);
  CHECK_FALSE(impure.pure);
  CHECK_FALSE(impure.min_t);
  CHECK(impure.max_k_per_t.empty());

  // Δ_1 * <{x},{y}> is Buchsbaum but not 2-Buchsbaum.
  const auto susp = join(gen::miyazaki_base(), two_points_xy());
  const auto rs = classify(susp, gf2);
  REQUIRE(rs.max_k_per_t.count(1));
  CHECK(rs.max_k_per_t.at(1) == 1);
  CHECK(oracle::is_cm_t(testing::to_oracle(susp), 1, 2));
  CHECK_FALSE(oracle::is_k_cm_t(testing::to_oracle(susp), 2, 1, 2));

  // Recorded k never decreases in t.
  const auto sphere = classify(gen::boundary_simplex(5), gf2);
  std::size_t previous = 1;
  for (const auto& [t, k] : sphere.max_k_per_t) {
    CHECK(k >= previous);
    previous = k;
  }
}

TEST_CASE("explore_join", "[classify]") {
  const auto point = gen::simplex(1);
  const auto obs = explore_join({point, point}, gf2);
  REQUIRE(obs.size() == 1);
  CHECK(obs[0].first_min_t == 0);
  CHECK(obs[0].second_min_t == 0);
  CHECK(obs[0].join_min_t == 0);

  const std::vector<SimplicialComplex> pool = {gen::miyazaki_base(), gen::simplex(2)};
  const auto m = explore_join(pool, gf2);
  REQUIRE(m.size() == 1);
  // Δ_1 is a connected graph, hence Cohen-Macaulay; it is only not 2-CM.
  CHECK(oracle::is_cm(testing::to_oracle(gen::miyazaki_base()), 2));
  CHECK(m[0].first_min_t == 0);
  CHECK(m[0].second_min_t == 0);
  CHECK(m[0].join_min_t == 0);

  const auto three = explore_join({point, gen::cycle(4), two_points_xy()}, gf2);
  CHECK(three.size() == 3);
  // Suspension of the 4-cycle is a 2-sphere.
  CHECK(three[2].join_min_t == 0);
}

TEST_CASE("first_failure is independent of the worker count", "[classify]") {
  for (unsigned jobs : {1u, 2u, 7u})
    for (std::size_t bad : {std::size_t{0}, std::size_t{13}, std::size_t{99}, std::size_t{100}})
      CHECK(detail::first_failure(100, jobs, [bad](std::size_t i) { return i < bad || i % 2; }) ==
            (bad % 2 == 0 ? bad : std::min<std::size_t>(bad + 1, 100)));
}

TEST_CASE("results do not depend on the worker count", "[classify]") {
  const auto c = gen::random_pure(7, 3, 0.5, 11);
  for (int t = 0; t <= 2; ++t)
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK(is_k_cm_t(c, k, t, gf2, Exec{1}) == is_k_cm_t(c, k, t, gf2, Exec{4}));
}

// Γ: two (d-1)-simplices meeting in a (t-2)-face; Λ its (d-2)-skeleton.
// Λ is 2-CM_t. It fails 2-CM_{t-1} for t ≤ d-2; at t = d-1 it holds.
TEST_CASE("skeleton of glued simplices", "[classify]") {
  for (std::size_t d = 2; d <= 5; ++d)
    for (int t = 1; t <= static_cast<int>(d) - 1; ++t) {
      const auto gamma = gen::glued_simplices(gen::GluedFamilySpec::uniform(d, 2, t - 2));
      const auto lambda = skeleton(gamma, static_cast<int>(d) - 2);
      const auto o = testing::to_oracle(lambda);
      INFO("d=" << d << " t=" << t);
      const bool k2_t = is_k_cm_t(lambda, 2, t, gf2);
      const bool k2_prev = is_k_cm_t(lambda, 2, t - 1, gf2);
      CHECK(k2_t == oracle::is_k_cm_t(o, 2, t, 2));
      CHECK(k2_prev == oracle::is_k_cm_t(o, 2, t - 1, 2));
      CHECK(k2_t);
      CHECK(k2_prev == (t == static_cast<int>(d) - 1));
    }
}

// Library deciders against the brute-force oracle on random complexes.
TEST_CASE("deciders match the oracle", "[classify][property]") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const auto c = trial % 2 ? gen::random_pure(n, 1 + rng() % 3, 0.5, rng())
                             : testing::random_complex(rng, n);
    const auto o = testing::to_oracle(c);
    INFO("trial " << trial);
    for (unsigned p : {0u, 2u, 3u}) {
      const auto field = p ? FieldSpec::prime(p) : FieldSpec::rationals();
      CHECK(is_cm(c, field) == (oracle::pure(o) && oracle::is_cm(o, p)));
      for (int t = 0; t <= std::max(c.dim(), 0) + 1; ++t) {
        const bool expected = oracle::is_cm_t(o, t, p);
        for (auto criterion : kAllCriteria)
          CHECK(is_cm_t(c, t, field, criterion) == expected);
        for (std::size_t k = 1; k <= 2; ++k)
          CHECK(is_k_cm_t(c, k, t, field) == oracle::is_k_cm_t(o, static_cast<int>(k), t, p));
      }
    }
  }
}
