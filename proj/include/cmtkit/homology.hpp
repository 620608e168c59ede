#pragma once

#include <cmtkit/complex.hpp>
#include <cmtkit/field.hpp>
#include <cmtkit/matrix.hpp>

#include <string>
#include <vector>

namespace cmt {

/**
 * Betti numbers indexed by homological degree, starting at `first_index()`.
 * Reduced Betti vectors start at -1; local homology at a face σ starts at
 * #σ - 1. Degrees outside the stored range read as zero.
 */
class BettiVector {
public:
  BettiVector() = default;
  BettiVector(int first_index, std::vector<std::size_t> values)
      : first_(first_index), values_(std::move(values)) {}

  int first_index() const { return first_; }
  int last_index() const { return first_ + static_cast<int>(values_.size()) - 1; }
  std::size_t operator[](int degree) const;
  const std::vector<std::size_t>& values() const { return values_; }

  /// True iff every degree strictly below `bound` is zero.
  bool vanishes_below(int bound) const;
  /// Σ (-1)^i β_i.
  long long euler_characteristic() const;

  std::string to_string() const;

  bool operator==(const BettiVector&) const = default;

private:
  int first_ = -1;
  std::vector<std::size_t> values_;
};

/**
 * ∂_i : C_i → C_{i-1} of the augmented chain complex, for i ≥ 0. Rows are the
 * faces with i vertices, columns the faces with i+1 vertices, both in
 * canonical order. Removing the j-th smallest vertex (j from 0) has sign
 * (-1)^j. ∂_0 is the augmentation: one row for ∅, every entry +1.
 */
struct BoundaryMatrix {
  int degree = 0;
  std::vector<Face> row_faces;
  std::vector<Face> col_faces;
  SparseIntMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int degree);

/// β̃_{-1..dim Δ} over the field. Throws on the void complex.
BettiVector reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

/**
 * Local homology at an interior point of σ: degree i holds
 * β̃_{i-#σ}(lk σ). Requires σ ∈ Δ and σ ≠ ∅.
 */
BettiVector local_betti(const SimplicialComplex& complex, Face sigma, const FieldSpec& field);

/// Σ_{i ≥ -1} (-1)^i f_i from face counts, ∅ counted once in degree -1.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

} // namespace cmt
