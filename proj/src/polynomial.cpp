#include "frobroot/polynomial.hpp"

#include "frobroot/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace frobroot {

namespace {

bool greater(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  return compare(a, b, o) == std::strong_ordering::greater;
}

}  // namespace

void Polynomial::check_ring(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial f(ring);
  auto v = ring->field().reduce_signed(c);
  if (v != 0) f.terms_.push_back({Monomial(ring->num_variables()), v});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) {
    fail(ErrorCode::invalid_argument, "variable index out of range");
  }
  Monomial m(ring->num_variables());
  return term(ring, m.with(index, 1), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono,
                            PrimeField::Value coeff) {
  if (mono.size() != ring->num_variables()) {
    fail(ErrorCode::arity_mismatch, "monomial arity does not match ring");
  }
  Polynomial f(ring);
  coeff = ring->field().reduce(coeff);
  if (coeff != 0) f.terms_.push_back({std::move(mono), coeff});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->num_variables()) {
      fail(ErrorCode::arity_mismatch, "monomial arity does not match ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return greater(a.monomial, b.monomial, order);
  });
  Polynomial f(std::move(ring));
  for (auto& t : terms) {
    auto c = field.reduce(t.coeff);
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      f.terms_.back().coeff = field.add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({std::move(t.monomial), c});
    }
  }
  return f;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto cmp = compare(terms_[i].monomial, o.terms_[j].monomial, order);
    if (cmp == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto c = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (c != 0) r.terms_.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) {
    return times_term(o.terms_[0].monomial, o.terms_[0].coeff);
  }
  if (terms_.size() == 1) {
    return o.times_term(terms_[0].monomial, terms_[0].coeff);
  }
  const auto& field = ring_->field();
  std::unordered_map<Monomial, PrimeField::Value, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.monomial * b.monomial];
      slot = field.add(slot, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(PrimeField::Value c) const {
  c = ring_->field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m,
                                  PrimeField::Value c) const {
  c = ring_->field().reduce(c);
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& t : terms_) {
    r.terms_.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  }
  return r;
}

Polynomial Polynomial::minus_term_multiple(const Monomial& m,
                                           PrimeField::Value c,
                                           const Polynomial& g) const {
  check_ring(g);
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  const auto negc = field.neg(field.reduce(c));
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = g.terms_[j].monomial * m;
    if (i < terms_.size()) {
      auto cmp = compare(terms_[i].monomial, gm, order);
      if (cmp == std::strong_ordering::greater) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      if (cmp == std::strong_ordering::equal) {
        auto v = field.add(terms_[i].coeff, field.mul(negc, g.terms_[j].coeff));
        if (v != 0) r.terms_.push_back({std::move(gm), v});
        ++i;
        ++j;
        continue;
      }
    }
    auto v = field.mul(negc, g.terms_[j].coeff);
    if (v != 0) r.terms_.push_back({std::move(gm), v});
    ++j;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(std::uint64_t e) const {
  const std::uint64_t q = checked_power(ring_->characteristic(), e);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Scaling every exponent by q is an order-preserving map on monomials.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.scaled(q), t.coeff});
  return r;
}

Polynomial Polynomial::lifted_to(const RingPtr& bigger,
                                 std::size_t count) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    terms.push_back({t.monomial.extended_front(count), t.coeff});
  }
  return from_terms(bigger, std::move(terms));
}

Polynomial Polynomial::projected_to(const RingPtr& smaller,
                                    std::size_t count) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < count; ++i) {
      if (t.monomial[i] != 0) {
        fail(ErrorCode::invalid_argument,
             "polynomial involves an eliminated variable");
      }
    }
    terms.push_back({t.monomial.dropped_front(count), t.coeff});
  }
  return from_terms(smaller, std::move(terms));
}

bool Polynomial::is_canonical() const {
  const auto p = ring_->characteristic();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0 || terms_[i].coeff >= p) return false;
    if (terms_[i].monomial.size() != ring_->num_variables()) return false;
    if (i > 0 && !greater(terms_[i - 1].monomial, terms_[i].monomial,
                          ring_->order())) {
      return false;
    }
  }
  return true;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

}  // namespace frobroot
