#include <catch2/catch_amalgamated.hpp>

#include <cmtkit/generators.hpp>
#include <cmtkit/homology.hpp>

#include "test_support.hpp"

using namespace cmt;
using testing::cx;
using testing::face_of;

namespace {

const std::vector<FieldSpec>& fields() {
  static const std::vector<FieldSpec> all = {FieldSpec::prime(2), FieldSpec::prime(3),
                                             FieldSpec::prime(5), FieldSpec::rationals()};
  return all;
}

std::vector<std::size_t> oracle_betti(const SimplicialComplex& c, const FieldSpec& f) {
  return oracle::reduced_betti(testing::to_oracle(c), f.is_rationals() ? 0 : f.characteristic());
}

bool boundary_squares_to_zero(const SimplicialComplex& c, int i) {
  const auto outer = boundary_matrix(c, i);
  const auto inner = boundary_matrix(c, i + 1);
  if (outer.col_faces != inner.row_faces)
    return false;
  for (std::size_t col = 0; col < inner.matrix.cols(); ++col)
    for (std::size_t row = 0; row < outer.matrix.rows(); ++row) {
      long long sum = 0;
      for (const auto& e : inner.matrix.column(col))
        sum += outer.matrix.at(row, e.row) * e.value;
      if (sum != 0)
        return false;
    }
  return true;
}

} // namespace

TEST_CASE("boundary matrix layout and signs", "[homology]") {
  const auto tri = cx({{1, 2, 3}});
  const auto d0 = boundary_matrix(tri, 0);
  CHECK(d0.row_faces == std::vector<Face>{Face{}});
  CHECK(d0.matrix.to_dense() == std::vector<std::int64_t>{1, 1, 1});

  const auto d2 = boundary_matrix(tri, 2);
  CHECK(d2.col_faces == std::vector<Face>{Face::of({0, 1, 2})});
  // {1,2,3} ↦ {2,3} - {1,3} + {1,2}; rows in canonical order {1,2},{1,3},{2,3}.
  CHECK(d2.matrix.to_dense() == std::vector<std::int64_t>{1, -1, 1});
}

TEST_CASE("reduced Betti numbers of small complexes", "[homology]") {
  const auto circle = cx({{1, 2}, {1, 3}, {2, 3}});
  for (const auto& f : fields()) {
    CHECK(reduced_betti(circle, f) == BettiVector(-1, {0, 0, 1}));
    CHECK(reduced_betti(cx({{1, 2, 3, 4}}), f) == BettiVector(-1, {0, 0, 0, 0, 0}));
    CHECK(reduced_betti(SimplicialComplex::irrelevant(), f) == BettiVector(-1, {1}));
    CHECK(reduced_betti(cx({{1}, {2}, {3}}), f) == BettiVector(-1, {0, 2}));
  }
  CHECK_THROWS_AS(reduced_betti(SimplicialComplex(), FieldSpec::prime(2)), Error);
}

TEST_CASE("projective plane Betti numbers depend on the characteristic", "[homology]") {
  const auto rp2 = gen::projective_plane_6();
  // Oracle: integer Smith form of the boundary maps.
  const auto o = testing::to_oracle(rp2);
  CHECK(oracle::boundary_torsion(o, 2) == std::vector<oracle::Int>{2});
  CHECK(oracle::reduced_betti(o, 2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(oracle::reduced_betti(o, 3) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(oracle::reduced_betti(o, 0) == std::vector<std::size_t>{0, 0, 0, 0});

  CHECK(reduced_betti(rp2, FieldSpec::prime(2)) == BettiVector(-1, {0, 0, 1, 1}));
  CHECK(reduced_betti(rp2, FieldSpec::prime(3)) == BettiVector(-1, {0, 0, 0, 0}));
  CHECK(reduced_betti(rp2, FieldSpec::rationals()) == BettiVector(-1, {0, 0, 0, 0}));
}

TEST_CASE("spheres have a single top Betti number", "[homology]") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto sphere = gen::boundary_simplex(n);
    const int d = static_cast<int>(n) - 2;
    for (const auto& f : fields()) {
      const auto b = reduced_betti(sphere, f);
      for (int i = -1; i <= d; ++i)
        CHECK(b[i] == (i == d ? 1u : 0u));
    }
  }
}

TEST_CASE("local homology is shifted link homology", "[homology]") {
  const auto f = FieldSpec::prime(2);
  const auto tri = cx({{1, 2, 3}});
  const auto top = local_betti(tri, face_of(tri, {1, 2, 3}), f);
  CHECK(top[2] == 1);
  CHECK(top[1] == 0);
  CHECK(top[0] == 0);

  const auto circle = cx({{1, 2}, {1, 3}, {2, 3}});
  const auto at_vertex = local_betti(circle, face_of(circle, {1}), f);
  CHECK(at_vertex[1] == 1);
  CHECK(at_vertex[0] == 0);

  const auto two = cx({{1, 2, 3}, {3, 4, 5}});
  const auto pinch = local_betti(two, face_of(two, {3}), f);
  CHECK(pinch[1] == 1);
  CHECK(pinch[2] == 0);
  CHECK(pinch.first_index() == 0);

  CHECK_THROWS_AS(local_betti(two, Face{}, f), Error);
  CHECK_THROWS_AS(local_betti(two, face_of(two, {1, 4}), f), Error);
}

TEST_CASE("homology laws on random complexes", "[homology][property]") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = testing::random_complex(rng, 2 + rng() % 6);
    INFO("trial " << trial);
    for (int i = 0; i < c.dim(); ++i)
      CHECK(boundary_squares_to_zero(c, i));
    for (const auto& f : fields()) {
      const auto b = reduced_betti(c, f);
      CHECK(b.values() == oracle_betti(c, f));
      CHECK(b.euler_characteristic() == reduced_euler_characteristic(c));
      // A cone over anything is acyclic.
      const auto cone = join(c, gen::simplex(1));
      CHECK(reduced_betti(cone, f).vanishes_below(cone.dim() + 1));
    }
  }
}
