#include "frobroot/field.hpp"

#include "frobroot/error.hpp"

#include <string>

namespace frobroot {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    fail(ErrorCode::invalid_argument,
         "p must be prime (got " + std::to_string(p) + ")");
  }
  p_ = static_cast<Value>(p);
}

PrimeField::Value PrimeField::reduce_signed(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Value>(r);
}

PrimeField::Value PrimeField::pow(Value a, std::uint64_t k) const noexcept {
  return static_cast<Value>(powmod(a, k, p_));
}

PrimeField::Value PrimeField::inv(Value a) const {
  if (a % p_ == 0) fail(ErrorCode::division_by_zero, "inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce_signed(t);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    fail(ErrorCode::field_mismatch,
         "field mismatch: F_" + std::to_string(field_.characteristic()) +
             " vs F_" + std::to_string(o.field_.characteristic()));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(value_, o.value_), 0};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(value_, o.value_), 0};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(value_, o.value_), 0};
}

FieldElement FieldElement::operator-() const {
  return {field_, field_.neg(value_), 0};
}

FieldElement FieldElement::inverse() const {
  return {field_, field_.inv(value_), 0};
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  return {field_, field_.pow(value_, k), 0};
}

}  // namespace frobroot
