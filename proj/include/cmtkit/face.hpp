#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmt {

using VertexId = std::uint32_t;

/// Largest ambient vertex space a face can address.
inline constexpr std::size_t kMaxVertices = 64;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * A face of a simplicial complex: a duplicate-free set of vertex ids stored
 * as a fixed-width bitset over the ambient vertex space. The empty face is
 * the default value.
 *
 * Iteration and `vertices()` always yield ids in strictly increasing order,
 * which is also the orientation order used by the boundary operator.
 */
class Face {
public:
  constexpr Face() = default;

  static constexpr Face from_bits(std::uint64_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }

  static Face of(std::initializer_list<VertexId> ids) {
    return of(std::span<const VertexId>(ids.begin(), ids.size()));
  }

  /// Throws if an id is out of range or repeated.
  static Face of(std::span<const VertexId> ids) {
    Face f;
    for (VertexId v : ids) {
      if (v >= kMaxVertices)
        throw Error("vertex id " + std::to_string(v) + " exceeds the " +
                    std::to_string(kMaxVertices) + "-vertex limit");
      if (f.contains(v))
        throw Error("duplicate vertex " + std::to_string(v) + " in face");
      f.bits_ |= std::uint64_t{1} << v;
    }
    return f;
  }

  /// The face {0, ..., n-1}.
  static constexpr Face first_n(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr int dim() const { return static_cast<int>(size()) - 1; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(VertexId v) const {
    return v < kMaxVertices && ((bits_ >> v) & 1u);
  }
  constexpr bool is_subset_of(Face other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Face other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr Face operator|(Face o) const { return from_bits(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return from_bits(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return from_bits(bits_ & ~o.bits_); }

  constexpr Face with(VertexId v) const {
    return from_bits(bits_ | (std::uint64_t{1} << v));
  }
  constexpr Face without(VertexId v) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << v));
  }

  /// Smallest vertex id; the face must be nonempty.
  constexpr VertexId front() const {
    return static_cast<VertexId>(std::countr_zero(bits_));
  }
  /// One past the largest vertex id (0 for the empty face).
  constexpr std::size_t span_end() const { return 64 - std::countl_zero(bits_); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

  class iterator {
  public:
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t b) : rest_(b) {}
    constexpr VertexId operator*() const {
      return static_cast<VertexId>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr bool operator==(const Face&) const = default;

private:
  std::uint64_t bits_ = 0;
};

/// A set of vertices (W, V\W, supports). Same representation as a face.
using VertexSet = Face;

/**
 * Canonical order: by cardinality, then lexicographically on the increasing
 * vertex sequences. Used for every deterministic enumeration.
 */
struct CanonicalLess {
  constexpr bool operator()(Face a, Face b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
      return false;
    // The lowest differing vertex belongs to the lexicographically smaller one.
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

struct FaceHash {
  std::size_t operator()(Face f) const noexcept {
    std::uint64_t x = f.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

/// Calls `fn(sub)` for every subset of `face`, the empty set included.
template <typename Fn>
void for_each_subset(Face face, Fn&& fn) {
  const std::uint64_t full = face.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(Face::from_bits(sub));
    if (sub == full)
      break;
    sub = (sub - full) & full;
  }
}

/// All subsets of `ground` with exactly `k` elements, in canonical order.
std::vector<Face> subsets_of_size(Face ground, std::size_t k);

} // namespace cmt
