#pragma once

#include "frobroot/ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobroot {

struct Term {
  Monomial monomial;
  PrimeField::Value coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Immutable value: terms are kept strictly
/// descending in the ring's order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial mono,
                         PrimeField::Value coeff = 1);
  /// Builds a canonical polynomial from arbitrary (possibly repeated,
  /// unsorted, zero) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_one() const noexcept {
    return is_constant() && !is_zero() && terms_[0].coeff == 1;
  }

  /// Preconditions for the leading accessors: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  PrimeField::Value leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  Polynomial scaled(PrimeField::Value c) const;
  Polynomial times_term(const Monomial& m, PrimeField::Value c) const;
  /// this - c * m * g, the reduction step.
  Polynomial minus_term_multiple(const Monomial& m, PrimeField::Value c,
                                 const Polynomial& g) const;
  Polynomial monic() const;
  /// The polynomial minus its leading term.
  Polynomial tail() const;
  Polynomial pow(std::uint64_t k) const;
  /// f^(p^e): exponents scaled by p^e, coefficients fixed.
  Polynomial frobenius(std::uint64_t e) const;

  /// Moves the polynomial into a ring obtained by prepending `count`
  /// auxiliary variables (or dropping them, which requires that they do not
  /// occur).
  Polynomial lifted_to(const RingPtr& bigger, std::size_t count) const;
  Polynomial projected_to(const RingPtr& smaller, std::size_t count) const;

  /// Debug validator for the canonical-form invariant.
  bool is_canonical() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial text syntax, e.g. `2*x^3*y + y^2 + 1` or `2x^3 y`.
/// Throws syntax_error (with column) or unknown_name.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace frobroot
