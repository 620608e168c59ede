#pragma once

#include <cmtkit/field.hpp>

#include <cstdint>
#include <vector>

namespace cmt {

/**
 * Integer matrix in compressed column form. Entries are exact integers and
 * are interpreted in a field only when a rank is requested.
 */
class SparseIntMatrix {
public:
  struct Entry {
    std::size_t row;
    std::int64_t value;
    bool operator==(const Entry&) const = default;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Entries of a column sorted by row, zeros omitted.
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  /// Replaces a column; entries must be sorted by row with nonzero values.
  void set_column(std::size_t c, std::vector<Entry> entries) { columns_[c] = std::move(entries); }

  std::int64_t at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;

  /// Row-major dense copy.
  std::vector<std::int64_t> to_dense() const;

  bool operator==(const SparseIntMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Column count up to which elimination runs on a dense copy.
inline constexpr std::size_t kDenseColumnLimit = std::size_t{1} << 12;

/**
 * Exact rank over the field. GF(p) uses elimination mod p (dense up to
 * kDenseColumnLimit columns, sparse column reduction beyond). The rationals
 * use fraction-free Bareiss elimination on 64-bit integers, redone with
 * arbitrary precision if an intermediate overflows.
 */
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field);

namespace detail {
std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_mod_p_sparse(const SparseIntMatrix& m, std::uint32_t p);
std::size_t rank_rational_bareiss(const SparseIntMatrix& m);
} // namespace detail

} // namespace cmt
