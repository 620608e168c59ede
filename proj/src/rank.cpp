#include <cmtkit/matrix.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>

namespace cmt {

std::int64_t SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  return (it != col.end() && it->row == r) ? it->value : 0;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_)
    n += col.size();
  return n;
}

std::vector<std::int64_t> SparseIntMatrix::to_dense() const {
  std::vector<std::int64_t> out(rows_ * cols(), 0);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& e : columns_[c])
      out[e.row * cols() + c] = e.value;
  return out;
}

namespace {

std::uint64_t reduce_mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1)
      result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

} // namespace

namespace detail {

std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0)
    return 0;
  std::vector<std::uint64_t> a(rows * cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& e : m.column(c))
      a[e.row * cols + c] = reduce_mod(e.value, p);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    const std::uint64_t inv = inverse_mod(a[rank * cols + c], p);
    for (std::size_t j = c; j < cols; ++j)
      a[rank * cols + j] = a[rank * cols + j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i * cols + c];
      if (factor == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = factor * a[rank * cols + j] % p;
        a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p_sparse(const SparseIntMatrix& m, std::uint32_t p) {
  using Column = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::vector<Column> reduced;
  std::unordered_map<std::size_t, std::size_t> owner_of_pivot;
  Column scratch;

  for (std::size_t c = 0; c < m.cols(); ++c) {
    Column col;
    for (const auto& e : m.column(c)) {
      auto v = reduce_mod(e.value, p);
      if (v)
        col.emplace_back(e.row, v);
    }
    // Eliminate the lowest (largest-row) entry until it is a fresh pivot.
    while (!col.empty()) {
      auto it = owner_of_pivot.find(col.back().first);
      if (it == owner_of_pivot.end())
        break;
      const Column& other = reduced[it->second];
      const std::uint64_t factor = col.back().second * inverse_mod(other.back().second, p) % p;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          scratch.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
          scratch.emplace_back(other[j].first, (p - factor * other[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (col[i].second + p - factor * other[j].second % p) % p;
          if (v)
            scratch.emplace_back(col[i].first, v);
          ++i, ++j;
        }
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner_of_pivot.emplace(col.back().first, reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

// One Bareiss update (pivot * x - left * top) / prev. Returns nullopt when the
// exact result does not fit in 64 bits.
std::optional<std::int64_t> bareiss_step(std::int64_t pivot, std::int64_t x, std::int64_t left,
                                         std::int64_t top, std::int64_t prev) {
  __int128 a = static_cast<__int128>(pivot) * x;
  __int128 b = static_cast<__int128>(left) * top;
  __int128 diff;
  if (__builtin_sub_overflow(a, b, &diff))
    return std::nullopt;
  diff /= prev;
  if (diff > std::numeric_limits<std::int64_t>::max() ||
      diff < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(diff);
}

BigInt bareiss_step(const BigInt& pivot, const BigInt& x, const BigInt& left, const BigInt& top,
                    const BigInt& prev) {
  return (pivot * x - left * top) / prev;
}

template <typename T>
bool is_zero(const T& v) {
  return v == 0;
}

// Returns nullopt if the 64-bit instantiation overflows.
template <typename T>
std::optional<std::size_t> bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(a[pivot * cols + c]))
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols);
    const T piv = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T left = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          auto v = bareiss_step(piv, a[i * cols + j], left, a[rank * cols + j], prev);
          if (!v)
            return std::nullopt;
          a[i * cols + j] = *v;
        } else {
          a[i * cols + j] = bareiss_step(piv, a[i * cols + j], left, a[rank * cols + j], prev);
        }
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t rank_rational_bareiss(const SparseIntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0)
    return 0;
  auto dense = m.to_dense();
  if (auto r = bareiss_rank<std::int64_t>(dense, rows, cols))
    return *r;
  std::vector<BigInt> big(dense.begin(), dense.end());
  return *bareiss_rank<BigInt>(std::move(big), rows, cols);
}

} // namespace detail

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field) {
  if (field.is_rationals())
    return detail::rank_rational_bareiss(m);
  if (m.cols() <= kDenseColumnLimit && m.rows() <= kDenseColumnLimit)
    return detail::rank_mod_p_dense(m, field.characteristic());
  return detail::rank_mod_p_sparse(m, field.characteristic());
}

} // namespace cmt
