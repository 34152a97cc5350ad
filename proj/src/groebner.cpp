#include "frobroot/groebner.hpp"

#include "frobroot/error.hpp"
#include "frobroot/monomial_ideal.hpp"

#include <algorithm>
#include <optional>

namespace frobroot {

namespace {

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> G,
                               std::size_t* index) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].leading_monomial().divides(m)) {
      if (index) *index = i;
      return &G[i];
    }
  }
  return nullptr;
}

bool lm_greater(const Polynomial& a, const Polynomial& b) {
  return compare(a.leading_monomial(), b.leading_monomial(),
                 a.ring()->order()) == std::strong_ordering::greater;
}

void check_nonzero(std::span<const Polynomial> G, const RingPtr& ring) {
  for (const auto& g : G) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) fail(ErrorCode::invalid_argument, "zero divisor in reduction list");
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  check_nonzero(G, f.ring());
  const auto& field = f.ring()->field();
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Polynomial* g = find_reducer(lt.monomial, G, nullptr)) {
      auto c = field.mul(lt.coeff, field.inv(g->leading_coeff()));
      p = p.minus_term_multiple(g->leading_monomial().quotient_of(lt.monomial), c, *g);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

TrackedReduction reduce_tracked(const Polynomial& f,
                                std::span<const Polynomial> G) {
  check_nonzero(G, f.ring());
  const auto& field = f.ring()->field();
  std::vector<std::vector<Term>> cof(G.size());
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    std::size_t index = 0;
    if (const Polynomial* g = find_reducer(lt.monomial, G, &index)) {
      auto c = field.mul(lt.coeff, field.inv(g->leading_coeff()));
      auto m = g->leading_monomial().quotient_of(lt.monomial);
      cof[index].push_back({m, c});
      p = p.minus_term_multiple(m, c, *g);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  TrackedReduction out{Polynomial::from_terms(f.ring(), std::move(rem)), {}};
  out.cofactors.reserve(G.size());
  for (auto& terms : cof) {
    out.cofactors.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const auto& field = f.ring()->field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(f.leading_monomial().quotient_of(l),
                              field.inv(f.leading_coeff()));
  return a.minus_term_multiple(g.leading_monomial().quotient_of(l),
                               field.inv(g.leading_coeff()), g);
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

/// Drops elements whose leading monomial is divisible by another's, then
/// interreduces the rest into monic form sorted descending.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
  for (const auto& g : G) {
    if (g.is_constant()) return {Polynomial::constant(g.ring(), 1)};
  }
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return lm_greater(b, a);  // ascending, so earlier = smaller
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial& g = minimal[i];
    // The leading term is not reducible by the others (minimality).
    Polynomial tail = normal_form(g.tail(), others);
    Polynomial full = Polynomial::term(g.ring(), g.leading_monomial(), g.leading_coeff()) + tail;
    reduced.push_back(full.monic());
  }
  std::sort(reduced.begin(), reduced.end(), lm_greater);
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<Polynomial> G;
  for (const auto& g : gens) {
    if (!gens.empty()) require_same_ring(gens.front().ring(), g.ring());
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::constant(g.ring(), 1)};
    G.push_back(g.monic());
  }
  if (G.empty()) return {};

  std::vector<Pair> pairs;
  // treated[i][j] for i<j: the pair has been removed from the queue.
  std::vector<std::vector<bool>> queued;
  auto add_pairs_for = [&](std::size_t n) {
    queued.emplace_back(n + 1, false);
    for (auto& row : queued) row.resize(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({i, n, G[i].leading_monomial().lcm(G[n].leading_monomial())});
      queued[i][n] = true;
    }
  };
  for (std::size_t n = 0; n < G.size(); ++n) add_pairs_for(n);

  auto is_queued = [&](std::size_t a, std::size_t b) {
    return a < b ? queued[a][b] : queued[b][a];
  };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree, ties by pair index.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair pair = *best;
    pairs.erase(best);
    queued[pair.i][pair.j] = false;
    ++st.pairs_considered;

    const auto& fi = G[pair.i];
    const auto& fj = G[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (G[k].leading_monomial().divides(pair.lcm) && !is_queued(pair.i, k) &&
          !is_queued(pair.j, k)) {
        chain = true;
      }
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }
    Polynomial r = normal_form(s_polynomial(fi, fj), G);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.is_constant()) return {Polynomial::constant(r.ring(), 1)};
    G.push_back(r.monic());
    add_pairs_for(G.size() - 1);
  }
  return reduce_basis(std::move(G));
}

const char* to_string(IdealRelation r) noexcept {
  switch (r) {
    case IdealRelation::equal: return "equal";
    case IdealRelation::first_in_second: return "I_sub_J";
    case IdealRelation::second_in_first: return "J_sub_I";
    case IdealRelation::incomparable: return "incomparable";
  }
  return "?";
}

bool is_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.is_monomial()) {
    auto mons = ideal.monomial_generators();
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
      return monomial_ideal::contains(mons, t.monomial);
    });
  }
  return normal_form(f, ideal.groebner_basis()).is_zero();
}

bool is_contained(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_monomial() && b.is_monomial()) {
    auto bm = b.monomial_generators();
    for (const auto& g : a.generators()) {
      if (!monomial_ideal::contains(bm, g.leading_monomial())) return false;
    }
    return true;
  }
  for (const auto& g : a.generators()) {
    if (!is_member(g, b)) return false;
  }
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.groebner_basis() == b.groebner_basis();
}

IdealRelation compare_ideals(const Ideal& a, const Ideal& b) {
  if (ideals_equal(a, b)) return IdealRelation::equal;
  if (is_contained(a, b)) return IdealRelation::first_in_second;
  if (is_contained(b, a)) return IdealRelation::second_in_first;
  return IdealRelation::incomparable;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_monomial() && b.is_monomial()) {
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
    return Ideal::from_monomials(
        a.ring(), monomial_ideal::product(a.monomial_generators(), b.monomial_generators()));
  }
  return generic::product(a, b);
}

Ideal ideal_power(const Ideal& a, std::uint64_t k) {
  if (k == 0) return Ideal::unit(a.ring());
  if (a.is_zero()) return a;
  if (a.is_monomial()) {
    return Ideal::from_monomials(a.ring(), monomial_ideal::power(a.monomial_generators(), k));
  }
  Ideal result = Ideal::unit(a.ring());
  Ideal base = a;
  while (k > 0) {
    if (k & 1) result = ideal_product(result, base);
    k >>= 1;
    if (k > 0) base = ideal_product(base, base);
  }
  return result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal::from_monomials(
        a.ring(), monomial_ideal::intersection(a.monomial_generators(), b.monomial_generators()));
  }
  return generic::intersection(a, b);
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) fail(ErrorCode::zero_divisor_ideal, "colon by zero");
  if (a.is_monomial() && g.is_monomial()) {
    return Ideal::from_monomials(
        a.ring(), monomial_ideal::quotient(a.monomial_generators(), g.leading_monomial()));
  }
  return generic::quotient(a, g);
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) fail(ErrorCode::zero_divisor_ideal, "colon by the zero ideal");
  if (a.is_monomial() && b.is_monomial()) {
    return Ideal::from_monomials(
        a.ring(), monomial_ideal::colon(a.monomial_generators(), b.monomial_generators()));
  }
  Ideal result = ideal_quotient(a, b.generators().front());
  for (std::size_t i = 1; i < b.generators().size(); ++i) {
    result = ideal_intersection(result, ideal_quotient(a, b.generators()[i]));
  }
  return result;
}

namespace generic {

bool is_member(const Polynomial& f, std::span<const Polynomial> gens) {
  return normal_form(f, buchberger(gens)).is_zero();
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> prods;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) prods.push_back(f * g);
  }
  return Ideal(a.ring(), buchberger(prods));
}

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  RingPtr big = a.ring()->with_elimination_variables(1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.lifted_to(big, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.lifted_to(big, 1));
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gens)) {
    if (g.leading_monomial()[0] == 0) kept.push_back(g.projected_to(a.ring(), 1));
  }
  return Ideal(a.ring(), buchberger(kept));
}

Ideal quotient(const Ideal& a, const Polynomial& g) {
  require_same_ring(a.ring(), g.ring());
  if (g.is_zero()) fail(ErrorCode::zero_divisor_ideal, "colon by zero");
  Ideal meet = intersection(a, Ideal(a.ring(), {g}));
  std::vector<Polynomial> quotients;
  const std::vector<Polynomial> divisor{g};
  for (const auto& h : meet.generators()) {
    auto red = reduce_tracked(h, divisor);
    if (!red.remainder.is_zero()) {
      fail(ErrorCode::invalid_argument, "internal: inexact division in colon");
    }
    quotients.push_back(red.cofactors.front());
  }
  return Ideal(a.ring(), buchberger(quotients));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) fail(ErrorCode::zero_divisor_ideal, "colon by the zero ideal");
  Ideal result = quotient(a, b.generators().front());
  for (std::size_t i = 1; i < b.generators().size(); ++i) {
    result = intersection(result, quotient(a, b.generators()[i]));
  }
  return result;
}

}  // namespace generic

}  // namespace frobroot
