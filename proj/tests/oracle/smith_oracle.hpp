#pragma once

// Test-only reference implementation. Complexes are plain sets of sorted
// integer vectors, homology comes from the integer Smith normal form of
// boundary matrices built here. Nothing in this file calls into cmtkit.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Simplex = std::vector<int>;
using FaceSet = std::set<Simplex>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Downward closure of the given faces (∅ included when any face is given).
inline FaceSet closure(const std::vector<Simplex>& generators) {
  FaceSet out;
  for (Simplex g : generators) {
    std::sort(g.begin(), g.end());
    const std::size_t n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          s.push_back(g[i]);
      out.insert(s);
    }
  }
  return out;
}

inline int dim(const FaceSet& faces) {
  int d = -1;
  for (const auto& f : faces)
    d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

inline std::vector<Simplex> facets(const FaceSet& faces) {
  std::vector<Simplex> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (const auto& g : faces)
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    if (maximal)
      out.push_back(f);
  }
  return out;
}

inline bool pure(const FaceSet& faces) {
  auto fs = facets(faces);
  for (const auto& f : fs)
    if (f.size() != fs.front().size())
      return false;
  return true;
}

inline std::set<int> vertices(const FaceSet& faces) {
  std::set<int> v;
  for (const auto& f : faces)
    v.insert(f.begin(), f.end());
  return v;
}

inline Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

inline FaceSet link(const FaceSet& faces, const Simplex& sigma) {
  FaceSet out;
  for (const auto& tau : faces)
    if (disjoint(tau, sigma) && faces.count(set_union(tau, sigma)))
      out.insert(tau);
  return out;
}

inline FaceSet restrict_to(const FaceSet& faces, const std::set<int>& keep) {
  FaceSet out;
  for (const auto& f : faces)
    if (std::all_of(f.begin(), f.end(), [&](int v) { return keep.count(v) > 0; }))
      out.insert(f);
  return out;
}

/// Integer boundary ∂_i: faces of size i+1 → faces of size i, sign (-1)^j.
inline IntMatrix boundary(const FaceSet& faces, int i) {
  std::vector<Simplex> rows, cols;
  for (const auto& f : faces) {
    if (static_cast<int>(f.size()) == i)
      rows.push_back(f);
    if (static_cast<int>(f.size()) == i + 1)
      cols.push_back(f);
  }
  std::map<Simplex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r)
    row_of[rows[r]] = r;
  IntMatrix m(rows.size(), std::vector<Int>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      Simplex sub = cols[c];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
      m[row_of.at(sub)][c] = (j % 2 == 0) ? 1 : -1;
    }
  return m;
}

/**
 * Nonzero invariant factors d_1 | d_2 | ... of an integer matrix, via
 * unimodular row and column operations. Each pass moves the smallest
 * nonzero entry of the pivot row and column onto the diagonal, which keeps
 * intermediate entries small on boundary-like matrices.
 */
inline std::vector<Int> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a)
      std::swap(row[x], row[y]);
  };
  std::vector<Int> diag;
  for (std::size_t top = 0; top < rows && top < cols; ++top) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = top; r < rows; ++r)
      for (std::size_t c = top; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc])))
          pr = r, pc = c;
    if (pr == rows)
      break;
    std::swap(a[top], a[pr]);
    swap_cols(top, pc);

    for (;;) {
      const Int p = a[top][top];
      for (std::size_t r = top + 1; r < rows; ++r)
        if (Int q = a[r][top] / p; q != 0)
          for (std::size_t c = top; c < cols; ++c)
            a[r][c] -= q * a[top][c];
      for (std::size_t c = top + 1; c < cols; ++c)
        if (Int q = a[top][c] / p; q != 0)
          for (std::size_t r = top; r < rows; ++r)
            a[r][c] -= q * a[r][top];

      // Smallest leftover remainder in the pivot row or column.
      std::size_t br = top, bc = top;
      for (std::size_t r = top + 1; r < rows; ++r)
        if (a[r][top] != 0 && (br == top && bc == top ? true : abs(a[r][top]) < abs(a[br][bc])))
          br = r, bc = top;
      for (std::size_t c = top + 1; c < cols; ++c)
        if (a[top][c] != 0 && (br == top && bc == top ? true : abs(a[top][c]) < abs(a[br][bc])))
          br = top, bc = c;
      if (br != top) {
        std::swap(a[top], a[br]);
        continue;
      }
      if (bc != top) {
        swap_cols(top, bc);
        continue;
      }

      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t r = top + 1; r < rows && divisible; ++r)
        for (std::size_t c = top + 1; c < cols; ++c)
          if (a[r][c] % p != 0) {
            for (std::size_t cc = top; cc < cols; ++cc)
              a[top][cc] += a[r][cc];
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    diag.push_back(abs(a[top][top]));
  }
  return diag;
}

/// Rank over Q by Gaussian elimination on exact rationals.
inline std::size_t rank_rational(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m)
    a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0)
        continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

/// Rank over GF(p) by Gaussian elimination on residues.
inline std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  std::vector<std::vector<long long>> a;
  for (const auto& row : m) {
    std::vector<long long> r;
    for (const auto& v : row) {
      Int x = v % p;
      if (x < 0)
        x += p;
      r.push_back(static_cast<long long>(x));
    }
    a.push_back(r);
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto inverse = [p](long long x) {
    long long result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1)
        result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[rank], a[piv]);
    const long long inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const long long f = a[r][c] * inv % p;
      if (f == 0)
        continue;
      for (std::size_t cc = c; cc < cols; ++cc)
        a[r][cc] = ((a[r][cc] - f * a[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Rank over GF(p) (p prime) or over Q (p = 0) from the invariant factors.
inline std::size_t rank_from_smith(const std::vector<Int>& diag, unsigned p) {
  if (p == 0)
    return diag.size();
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [p](const Int& d) { return d % p != 0; }));
}

/// β̃_{-1..dim}; p = 0 means the rationals.
inline std::vector<std::size_t> reduced_betti(const FaceSet& faces, unsigned p) {
  const int top = dim(faces);
  std::vector<std::size_t> chains(static_cast<std::size_t>(top + 2), 0);
  for (const auto& f : faces)
    ++chains[f.size()];
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int i = 0; i <= top; ++i)
    ranks[static_cast<std::size_t>(i)] = rank_from_smith(smith_diagonal(boundary(faces, i)), p);
  std::vector<std::size_t> betti;
  for (int i = -1; i <= top; ++i) {
    const std::size_t out_rank = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
    betti.push_back(chains[static_cast<std::size_t>(i + 1)] - out_rank -
                    ranks[static_cast<std::size_t>(i + 1)]);
  }
  return betti;
}

/// Invariant factors greater than 1 of ∂_i (torsion of H_{i-1}).
inline std::vector<Int> boundary_torsion(const FaceSet& faces, int i) {
  std::vector<Int> t;
  for (const auto& d : smith_diagonal(boundary(faces, i)))
    if (d > 1)
      t.push_back(d);
  return t;
}

/// Reisner: every link has vanishing reduced homology below its dimension.
inline bool is_cm(const FaceSet& faces, unsigned p) {
  for (const auto& sigma : faces) {
    FaceSet lk = link(faces, sigma);
    auto betti = reduced_betti(lk, p);
    const int d = dim(lk);
    for (int i = -1; i < d; ++i)
      if (betti[static_cast<std::size_t>(i + 1)] != 0)
        return false;
  }
  return true;
}

inline bool is_cm_t(const FaceSet& faces, int t, unsigned p) {
  if (!pure(faces))
    return false;
  for (const auto& sigma : faces)
    if (static_cast<int>(sigma.size()) >= t && !is_cm(link(faces, sigma), p))
      return false;
  return true;
}

/// k-CM_t straight from the definition: all W ⊆ V with #W < k.
inline bool is_k_cm_t(const FaceSet& faces, int k, int t, unsigned p) {
  const auto v = vertices(faces);
  const std::vector<int> vs(v.begin(), v.end());
  const int d = dim(faces);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    if (__builtin_popcountll(mask) >= k)
      continue;
    std::set<int> keep;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!(mask >> i & 1))
        keep.insert(vs[i]);
    FaceSet rest = restrict_to(faces, keep);
    if (dim(rest) != d || !is_cm_t(rest, t, p))
      return false;
  }
  return true;
}

} // namespace oracle
