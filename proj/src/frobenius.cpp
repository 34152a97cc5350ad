#include "frobroot/frobenius.hpp"

#include "frobroot/error.hpp"
#include "frobroot/monomial_ideal.hpp"

#include <algorithm>

namespace frobroot {

Polynomial QDecomposition::reconstruct(const RingPtr& ring) const {
  Polynomial sum(ring);
  for (const auto& [residue, part] : parts) {
    std::vector<Term> terms;
    terms.reserve(part.num_terms());
    for (const auto& t : part.terms()) {
      terms.push_back({t.monomial.scaled(q) * residue, t.coeff});
    }
    sum = sum + Polynomial::from_terms(ring, std::move(terms));
  }
  return sum;
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t e) {
  if (e == 0) return ideal;
  std::vector<Polynomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(e));
  return Ideal(ideal.ring(), std::move(gens));
}

QDecomposition q_decompose(const Polynomial& f, std::uint64_t e) {
  if (e == 0) fail(ErrorCode::invalid_argument, "q_decompose needs e >= 1");
  QDecomposition out;
  out.q = checked_power(f.ring()->characteristic(), e);
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial quotient = t.monomial.floor_div(out.q);
    Monomial residue = quotient.scaled(out.q).quotient_of(t.monomial);
    buckets[std::move(residue)].push_back({std::move(quotient), t.coeff});
  }
  for (auto& [residue, terms] : buckets) {
    // Distinct source terms in one bucket have distinct quotients, so no
    // cancellation happens here.
    out.parts.emplace(residue, Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return out;
}

Ideal frobenius_root(const Ideal& ideal, std::uint64_t e) {
  if (e == 0) return ideal;
  const std::uint64_t q = checked_power(ideal.ring()->characteristic(), e);
  if (ideal.is_monomial()) {
    std::vector<Monomial> mons;
    mons.reserve(ideal.num_generators());
    for (const auto& g : ideal.generators()) mons.push_back(g.leading_monomial());
    return Ideal::from_monomials(ideal.ring(), monomial_ideal::frobenius_root(mons, q));
  }
  std::vector<Polynomial> components;
  for (const auto& g : ideal.generators()) {
    for (auto& [residue, part] : q_decompose(g, e).parts) {
      components.push_back(part.monic());
    }
  }
  // Deterministic merge: sort by leading monomial, drop duplicates.
  const auto& order = ideal.ring()->order();
  std::sort(components.begin(), components.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto c = compare(a.leading_monomial(), b.leading_monomial(), order);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return to_string(a) < to_string(b);
  });
  components.erase(std::unique(components.begin(), components.end()), components.end());
  for (const auto& c : components) {
    if (c.is_constant()) return Ideal::unit(ideal.ring());
  }
  return Ideal(ideal.ring(), std::move(components));
}

}  // namespace frobroot
