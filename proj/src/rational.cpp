#include "frobroot/rational.hpp"

#include "frobroot/error.hpp"

#include <cctype>
#include <limits>

namespace frobroot {

namespace {

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    fail(ErrorCode::exponent_overflow, std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

BigInt parse_digits(std::string_view text, std::string_view whole) {
  if (text.empty()) fail(ErrorCode::syntax_error, "malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorCode::syntax_error, "malformed rational '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

RationalExponent::RationalExponent(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) fail(ErrorCode::invalid_argument, "denominator must be positive");
  if (num_ < 0) fail(ErrorCode::invalid_argument, "exponent must be nonnegative");
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

RationalExponent RationalExponent::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_digits(text, text), BigInt(1)};
  BigInt num = parse_digits(text.substr(0, slash), text);
  BigInt den = parse_digits(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::syntax_error, "zero denominator in '" + std::string(text) + "'");
  return {std::move(num), std::move(den)};
}

std::uint64_t RationalExponent::ceil_mul(std::uint64_t q) const {
  BigInt v = (num_ * q + den_ - 1) / den_;
  return to_u64(v, "ceil(t*q)");
}

std::uint64_t RationalExponent::floor() const {
  return to_u64(num_ / den_, "floor(t)");
}

RationalExponent RationalExponent::operator+(const RationalExponent& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalExponent RationalExponent::operator-(const RationalExponent& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalExponent RationalExponent::operator*(const RationalExponent& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

std::strong_ordering operator<=>(const RationalExponent& a, const RationalExponent& b) {
  BigInt l = a.num_ * b.den_;
  BigInt r = b.num_ * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalExponent::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace frobroot
