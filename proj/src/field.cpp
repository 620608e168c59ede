#include <cmtkit/field.hpp>
#include <cmtkit/face.hpp>

#include <charconv>

namespace cmt {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error("GF(" + std::to_string(p) + ") is not a supported prime field");
  return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q")
    return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    auto digits = text.substr(2);
    std::uint32_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size())
      return prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected gf<p> or q)");
}

std::string FieldSpec::name() const {
  return is_rationals() ? "q" : "gf" + std::to_string(p_);
}

} // namespace cmt
