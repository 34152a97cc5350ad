#pragma once

#include <cstdint>
#include <compare>

namespace frobroot {

/// The prime field F_p for 2 <= p <= 2^31 - 1. Elements are raw residues in
/// [0, p); products fit in 64 bits.
class PrimeField {
 public:
  using Value = std::uint32_t;

  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws invalid_argument unless p is a prime in range.
  explicit PrimeField(std::uint64_t p);

  Value characteristic() const noexcept { return p_; }

  Value reduce(std::uint64_t x) const noexcept {
    return static_cast<Value>(x % p_);
  }
  Value reduce_signed(std::int64_t x) const noexcept;

  Value add(Value a, Value b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Value>(s >= p_ ? s - p_ : s);
  }
  Value sub(Value a, Value b) const noexcept {
    return a >= b ? a - b : static_cast<Value>(std::uint64_t{a} + p_ - b);
  }
  Value neg(Value a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Value mul(Value a, Value b) const noexcept {
    return static_cast<Value>((std::uint64_t{a} * b) % p_);
  }
  Value pow(Value a, std::uint64_t k) const noexcept;
  /// Throws division_by_zero on 0.
  Value inv(Value a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Value p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// A residue bundled with its field.
class FieldElement {
 public:
  FieldElement(PrimeField field, std::int64_t value)
      : field_(field), value_(field.reduce_signed(value)) {}

  PrimeField field() const noexcept { return field_; }
  PrimeField::Value value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(PrimeField field, PrimeField::Value raw, int)
      : field_(field), value_(raw) {}
  void check_same(const FieldElement& o) const;

  PrimeField field_;
  PrimeField::Value value_;
};

}  // namespace frobroot
