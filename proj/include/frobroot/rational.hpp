#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace frobroot {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational exponent t = num/den in lowest terms.
class RationalExponent {
 public:
  RationalExponent() : num_(0), den_(1) {}
  RationalExponent(std::uint64_t n) : num_(n), den_(1) {}  // NOLINT
  /// Throws invalid_argument if den <= 0 or num < 0.
  RationalExponent(BigInt num, BigInt den);

  /// "5/6", "2", "0". Throws syntax_error.
  static RationalExponent parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// ceil(t * q), exactly; throws exponent_overflow past 64 bits.
  std::uint64_t ceil_mul(std::uint64_t q) const;
  std::uint64_t ceil() const { return ceil_mul(1); }
  std::uint64_t floor() const;

  RationalExponent operator+(const RationalExponent& o) const;
  RationalExponent operator-(const RationalExponent& o) const;  // requires *this >= o
  RationalExponent operator*(const RationalExponent& o) const;

  friend std::strong_ordering operator<=>(const RationalExponent& a,
                                          const RationalExponent& b);
  friend bool operator==(const RationalExponent& a, const RationalExponent& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace frobroot
