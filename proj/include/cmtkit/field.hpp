#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cmt {

/// Coefficient field: GF(p) for a prime p < 2^31, or the rationals.
class FieldSpec {
public:
  enum class Kind { prime_field, rationals };

  /// Throws if p is not a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

  /// Accepts "gf<p>" (e.g. gf2, gf3) and "q" / "Q".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  /// p for GF(p), 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  /// "gf<p>" or "q"; parse(name()) round-trips.
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace cmt
