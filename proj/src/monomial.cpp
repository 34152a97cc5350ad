#include "frobroot/monomial.hpp"

#include "frobroot/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace frobroot {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Exponent>::max();

Exponent checked_exponent(std::uint64_t value) {
  if (value > kMaxExponent) {
    fail(ErrorCode::exponent_overflow,
         "exponent " + std::to_string(value) + " exceeds 32 bits");
  }
  return static_cast<Exponent>(value);
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : exps_(exps.begin(), exps.end()) {
  recompute_degree();
}

Monomial::Monomial(std::span<const Exponent> exps)
    : exps_(exps.begin(), exps.end()) {
  recompute_degree();
}

void Monomial::recompute_degree() noexcept {
  degree_ = 0;
  for (Exponent e : exps_) degree_ += e;
}

void Monomial::check_arity(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    fail(ErrorCode::arity_mismatch,
         "monomials in " + std::to_string(exps_.size()) + " and " +
             std::to_string(other.exps_.size()) + " variables");
  }
}

bool Monomial::divides(const Monomial& other) const {
  check_arity(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_arity(other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  check_arity(other);
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) {
      fail(ErrorCode::invalid_argument, "monomial quotient is not exact");
    }
    r.exps_[i] = other.exps_[i] - exps_[i];
  }
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_arity(other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  }
  r.recompute_degree();
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  check_arity(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(*this);
  for (auto& e : r.exps_) {
    if (e != 0 && k > kMaxExponent / e) {
      fail(ErrorCode::exponent_overflow,
           "exponent " + std::to_string(e) + " * " + std::to_string(k) +
               " exceeds 32 bits");
    }
    e = static_cast<Exponent>(e * k);
  }
  r.recompute_degree();
  return r;
}

Monomial Monomial::floor_div(std::uint64_t q) const {
  Monomial r(*this);
  for (auto& e : r.exps_) e = static_cast<Exponent>(e / q);
  r.recompute_degree();
  return r;
}

Monomial Monomial::saturating_sub(const Monomial& other) const {
  check_arity(other);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  r.recompute_degree();
  return r;
}

Monomial Monomial::with(std::size_t i, Exponent value) const {
  Monomial r(*this);
  r.exps_[i] = value;
  r.recompute_degree();
  return r;
}

Monomial Monomial::extended_front(std::size_t count) const {
  Monomial r;
  r.exps_.assign(count, 0);
  r.exps_.insert(r.exps_.end(), exps_.begin(), exps_.end());
  r.degree_ = degree_;
  return r;
}

Monomial Monomial::dropped_front(std::size_t count) const {
  Monomial r;
  r.exps_.assign(exps_.begin() + static_cast<std::ptrdiff_t>(count),
                 exps_.end());
  r.recompute_degree();
  return r;
}

std::strong_ordering operator<=>(const Monomial& a,
                                 const Monomial& b) noexcept {
  return std::lexicographical_compare_three_way(
      a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Exponent e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::strong_ordering compare_lex(std::span<const Exponent> a,
                                 std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_revlex_tail(std::span<const Exponent> a,
                                         std::span<const Exponent> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             const MonomialOrder& order) {
  if (a.size() != b.size()) {
    fail(ErrorCode::arity_mismatch,
         "comparing monomials in " + std::to_string(a.size()) + " and " +
             std::to_string(b.size()) + " variables");
  }
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (order.weighted_prefix > 0) {
    std::uint64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < order.weighted_prefix; ++i) {
      wa += ea[i];
      wb += eb[i];
    }
    if (wa != wb) return wa <=> wb;
  }
  switch (order.kind) {
    case OrderKind::lex:
      return compare_lex(ea, eb);
    case OrderKind::grlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return compare_lex(ea, eb);
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return compare_revlex_tail(ea, eb);
  }
  return std::strong_ordering::equal;
}

const char* to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
  }
  return "?";
}

std::uint64_t checked_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) {
      fail(ErrorCode::exponent_overflow,
           std::to_string(p) + "^" + std::to_string(e) + " exceeds 64 bits");
    }
    q *= p;
  }
  return q;
}

}  // namespace frobroot
