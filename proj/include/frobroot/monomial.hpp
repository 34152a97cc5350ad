#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace frobroot {

using Exponent = std::uint32_t;

/// Exponent vector x^a. All arithmetic is overflow-checked and throws
/// ErrorCode::exponent_overflow; the total degree is cached.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 6>;

  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Componentwise a <= b.
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Every exponent multiplied by k.
  Monomial scaled(std::uint64_t k) const;
  /// Componentwise floor(a / q).
  Monomial floor_div(std::uint64_t q) const;
  /// Componentwise max(a - b, 0).
  Monomial saturating_sub(const Monomial& other) const;

  Monomial with(std::size_t i, Exponent value) const;
  /// Prepends `count` zero exponents (used when adjoining auxiliary variables).
  Monomial extended_front(std::size_t count) const;
  /// Drops the first `count` exponents.
  Monomial dropped_front(std::size_t count) const;

  /// Plain lexicographic comparison of exponent vectors; a container key
  /// order, not a monomial order.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void recompute_degree() noexcept;
  void check_arity(const Monomial& other) const;

  Storage exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { lex, grlex, grevlex };

/// A monomial order on exponent vectors. `weighted_prefix > 0` yields the
/// elimination order used internally for colon/intersection: first compare
/// the total degree in the leading `weighted_prefix` variables, then break ties
/// with `kind`.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t weighted_prefix = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Three-way comparison of a and b under `order`; throws arity_mismatch.
std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             const MonomialOrder& order);

const char* to_string(OrderKind kind) noexcept;

/// q = p^e with 64-bit overflow detection.
std::uint64_t checked_power(std::uint64_t p, std::uint64_t e);

}  // namespace frobroot
