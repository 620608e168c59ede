#pragma once

#include <cmtkit/complex.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace cmt::gen {

/// One facet {0..n-1}; simplex(0) is {∅}.
SimplicialComplex simplex(std::size_t n);

/// All (n-1)-subsets of {0..n-1}: the boundary of the (n-1)-simplex. n ≥ 2.
SimplicialComplex boundary_simplex(std::size_t n);

/// Cycle graph on n ≥ 3 vertices.
SimplicialComplex cycle(std::size_t n);

/**
 * m simplices with d vertices each. overlap_dims[i][j] is the dimension of
 * the intersection of simplices i and j (-1 for disjoint, at most d-2).
 * Every pair with a nonnegative overlap gets its own block of fresh shared
 * vertices, so intersections of three or more simplices are empty.
 */
struct GluedFamilySpec {
  std::size_t d = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> overlap_dims;

  /// All pairwise overlaps equal to `overlap`.
  static GluedFamilySpec uniform(std::size_t d, std::size_t m, int overlap);
};

/// Throws with the offending pair when the table is malformed or unrealizable.
SimplicialComplex glued_simplices(const GluedFamilySpec& spec);

/// Δ_1 = <12,13,23,14,15,45> on labels 1..5.
SimplicialComplex miyazaki_base();

struct MiyazakiExample {
  SimplicialComplex complex;
  /// The edge {x,y} of the joined factor.
  Face sigma;
};

/// Δ_1 * <{x,y}> with σ_1 = {x,y}.
MiyazakiExample miyazaki_example();

/// The 6-vertex real projective plane (10 triangles).
SimplicialComplex projective_plane_6();

/**
 * Random pure complex: each d-subset of {0..n-1} is kept with probability
 * `density`, drawn from std::mt19937_64 seeded with `seed`; the draw is
 * repeated (same stream) until at least one facet survives. Vertex ids are
 * then compacted. Deterministic per seed on every platform.
 */
SimplicialComplex random_pure(std::size_t n, std::size_t d, double density, std::uint64_t seed);

} // namespace cmt::gen
