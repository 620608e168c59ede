#include <cmtkit/generators.hpp>

#include <cmath>
#include <random>

namespace cmt::gen {

SimplicialComplex simplex(std::size_t n) {
  if (n == 0)
    return SimplicialComplex::irrelevant();
  if (n > kMaxVertices)
    throw Error("simplex too large");
  const Face top = Face::first_n(n);
  return SimplicialComplex::from_facets(std::span<const Face>(&top, 1));
}

SimplicialComplex boundary_simplex(std::size_t n) {
  if (n < 2)
    throw Error("boundary_simplex needs n >= 2");
  if (n > kMaxVertices)
    throw Error("boundary_simplex too large");
  std::vector<Face> facets;
  const Face all = Face::first_n(n);
  for (VertexId v = 0; v < n; ++v)
    facets.push_back(all.without(v));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cycle(std::size_t n) {
  if (n < 3)
    throw Error("cycle needs n >= 3");
  std::vector<Face> edges;
  for (VertexId v = 0; v < n; ++v)
    edges.push_back(Face::of({v, static_cast<VertexId>((v + 1) % n)}));
  return SimplicialComplex::from_facets(edges);
}

GluedFamilySpec GluedFamilySpec::uniform(std::size_t d, std::size_t m, int overlap) {
  GluedFamilySpec spec{d, m, std::vector<std::vector<int>>(m, std::vector<int>(m, overlap))};
  for (std::size_t i = 0; i < m; ++i)
    spec.overlap_dims[i][i] = static_cast<int>(d) - 1;
  return spec;
}

SimplicialComplex glued_simplices(const GluedFamilySpec& spec) {
  const std::size_t d = spec.d, m = spec.m;
  if (d == 0 || m == 0)
    throw Error("glued family needs d >= 1 and m >= 1");
  if (spec.overlap_dims.size() != m)
    throw Error("overlap table must be m x m");
  for (const auto& row : spec.overlap_dims)
    if (row.size() != m)
      throw Error("overlap table must be m x m");

  auto pair_name = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  std::vector<Face> simplices(m);
  std::vector<std::size_t> used(m, 0);
  VertexId next = 0;
  auto fresh = [&]() {
    if (next >= kMaxVertices)
      throw Error("glued family exceeds the vertex limit");
    return next++;
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int o = spec.overlap_dims[i][j];
      if (o != spec.overlap_dims[j][i])
        throw Error("overlap table not symmetric at pair " + pair_name(i, j));
      if (o < -1 || o > static_cast<int>(d) - 2)
        throw Error("overlap dimension out of range at pair " + pair_name(i, j));
      const auto block = static_cast<std::size_t>(o + 1);
      if (used[i] + block > d || used[j] + block > d)
        throw Error("overlaps do not fit in a simplex of size " + std::to_string(d) +
                    " at pair " + pair_name(i, j));
      for (std::size_t b = 0; b < block; ++b) {
        const VertexId v = fresh();
        simplices[i] = simplices[i].with(v);
        simplices[j] = simplices[j].with(v);
      }
      used[i] += block;
      used[j] += block;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    while (used[i]++ < d)
      simplices[i] = simplices[i].with(fresh());
  return SimplicialComplex::from_facets(simplices);
}

SimplicialComplex miyazaki_base() {
  std::vector<Face> facets = {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3}),
                              Face::of({1, 4}), Face::of({1, 5}), Face::of({4, 5})};
  return SimplicialComplex::from_facets(facets);
}

MiyazakiExample miyazaki_example() {
  const Face xy = Face::of({0, 1});
  auto edge = SimplicialComplex::from_facets(std::span<const Face>(&xy, 1), {}, {"x", "y"});
  const SimplicialComplex base = miyazaki_base();
  SimplicialComplex whole = join(base, edge);
  const auto offset = static_cast<VertexId>(base.n_vertices());
  return {std::move(whole), Face::of({offset, offset + 1})};
}

SimplicialComplex projective_plane_6() {
  const int triangles[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
  std::vector<Face> facets;
  for (const auto& tri : triangles)
    facets.push_back(Face::of({static_cast<VertexId>(tri[0]), static_cast<VertexId>(tri[1]),
                               static_cast<VertexId>(tri[2])}));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex random_pure(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  if (d < 1 || d > n)
    throw Error("random_pure needs 1 <= d <= n");
  if (n > kMaxVertices)
    throw Error("random_pure: too many vertices");
  if (!(density > 0.0) || density > 1.0)
    throw Error("random_pure needs 0 < density <= 1");

  const auto candidates = subsets_of_size(Face::first_n(n), d);
  // Keep a candidate when the raw 64-bit draw falls below density * 2^64.
  const long double scaled = std::ldexp(static_cast<long double>(density), 64);
  const std::uint64_t threshold =
      density >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Face> chosen;
    for (Face f : candidates)
      if (rng() <= threshold)
        chosen.push_back(f);
    if (!chosen.empty())
      return SimplicialComplex::from_facets(chosen);
  }
  throw Error("density too low: no facet drawn after " + std::to_string(kAttempts) + " attempts");
}

} // namespace cmt::gen
