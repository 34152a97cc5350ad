#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the engine's algorithms; inputs and outputs are plain exponent
// vectors so the two sides can be compared.

#include "frobroot/groebner.hpp"
#include "frobroot/test_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Exps = std::vector<std::int64_t>;

// Exact fraction with positive denominator, small enough for int64 cross
// products in these tests.
struct Frac {
  std::int64_t num;
  std::int64_t den;
};

inline int cmp(const Frac& a, const Frac& b) {
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline Frac make_frac(std::int64_t num, std::int64_t den) {
  if (den < 0) return {-num, -den};
  return {num, den};
}

// Is there lambda in [0,1] with lambda*g + (1-lambda)*h < w componentwise,
// where w = (u + 1) * tden / tnum?
inline bool segment_strictly_below(const Exps& g, const Exps& h, const Exps& u,
                                   std::int64_t tnum, std::int64_t tden) {
  Frac lo{0, 1}, hi{1, 1};
  bool lo_strict = false, hi_strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    // lambda * tnum * (g_i - h_i) < (u_i + 1) * tden - tnum * h_i
    std::int64_t a = tnum * (g[i] - h[i]);
    std::int64_t b = (u[i] + 1) * tden - tnum * h[i];
    if (a == 0) {
      if (b <= 0) return false;
      continue;
    }
    Frac bound = make_frac(b, a);
    if (a > 0) {
      int c = cmp(bound, hi);
      if (c < 0 || (c == 0 && !hi_strict)) {
        hi = bound;
        hi_strict = true;
      }
    } else {
      int c = cmp(bound, lo);
      if (c > 0 || (c == 0 && !lo_strict)) {
        lo = bound;
        lo_strict = true;
      }
    }
  }
  int c = cmp(lo, hi);
  return c < 0 || (c == 0 && !lo_strict && !hi_strict);
}

// Newton-polyhedron criterion for monomial ideals in two variables:
// x^u is in tau(a^t) iff u + (1,1) lies in the interior of t * Newt(a).
// For t > 0 the interior test reduces to a convex combination of at most two
// generator exponents lying strictly below (u + 1) / t.
inline bool newton_tau_contains(const std::vector<Exps>& gens, const Exps& u,
                                std::int64_t tnum, std::int64_t tden) {
  if (tnum == 0) return true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (segment_strictly_below(gens[i], gens[j], u, tnum, tden)) return true;
    }
  }
  return false;
}

// Every exponent vector of n variables with total degree <= max_degree.
inline std::vector<Exps> monomials_up_to(std::size_t n, std::int64_t max_degree) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, max_degree);
  return out;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Direct divisibility membership for monomial ideals.
inline bool monomial_member(const std::vector<Exps>& gens, const Exps& m) {
  for (const auto& g : gens) {
    if (divides(g, m)) return true;
  }
  return false;
}

// x^v in (I : J) for monomial I, J, by definition: x^v * h in I for every
// generator h of J.
inline bool monomial_colon_member(const std::vector<Exps>& I, const std::vector<Exps>& J,
                                  const Exps& v) {
  for (const auto& h : J) {
    Exps w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] + h[i];
    if (!monomial_member(I, w)) return false;
  }
  return true;
}

// Componentwise floor(g / q) for every generator, not minimalized.
inline std::vector<Exps> floor_root(const std::vector<Exps>& gens, std::int64_t q) {
  std::vector<Exps> out;
  for (const auto& g : gens) {
    Exps r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] / q;
    out.push_back(r);
  }
  return out;
}

// Closed form for powers of the maximal ideal in n variables: tau(m^k) = (1)
// for k < n, else m^(k - n + 1). Returned as a predicate on exponent vectors.
inline bool diagonal_tau_contains(std::size_t n, std::int64_t k, const Exps& u) {
  if (k < static_cast<std::int64_t>(n)) return true;
  std::int64_t deg = 0;
  for (auto x : u) deg += x;
  return deg >= k - static_cast<std::int64_t>(n) + 1;
}

inline Exps exps_of(const frobroot::Monomial& m) {
  Exps e;
  for (auto x : m.exponents()) e.push_back(x);
  return e;
}

inline frobroot::Monomial monomial_of(const Exps& e) {
  std::vector<frobroot::Exponent> v(e.begin(), e.end());
  return frobroot::Monomial(std::span<const frobroot::Exponent>(v));
}

inline bool ideal_contains_monomial(const frobroot::Ideal& I, const Exps& e) {
  return frobroot::is_member(frobroot::Polynomial::term(I.ring(), monomial_of(e)), I);
}

// Fixed-seed generators. Raw modulo keeps the stream identical on every
// standard library.
class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t k) { return rng_() % k; }

  Exps exponents(std::size_t n, std::int64_t max_degree) {
    Exps e(n, 0);
    std::int64_t left = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_degree) + 1));
    for (std::size_t i = 0; i < n && left > 0; ++i) {
      auto take = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(left) + 1));
      e[i] = take;
      left -= take;
    }
    // Rotate so that the first variable is not systematically favored.
    std::rotate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(below(n)), e.end());
    return e;
  }

  std::vector<Exps> monomial_ideal(std::size_t n, std::int64_t max_degree, std::size_t max_gens) {
    std::vector<Exps> gens;
    std::size_t count = 1 + below(max_gens);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(exponents(n, max_degree));
    return gens;
  }

  // Like monomial_ideal but never the unit ideal.
  std::vector<Exps> proper_monomial_ideal(std::size_t n, std::int64_t max_degree, std::size_t max_gens) {
    std::vector<Exps> gens;
    std::size_t count = 1 + below(max_gens);
    while (gens.size() < count) {
      Exps e = exponents(n, max_degree);
      if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x > 0; })) gens.push_back(e);
    }
    return gens;
  }

  frobroot::Polynomial nonconstant_polynomial(const frobroot::RingPtr& ring, std::int64_t max_degree,
                                             std::size_t max_terms) {
    while (true) {
      auto f = polynomial(ring, max_degree, max_terms);
      if (!f.is_constant()) return f;
    }
  }

  frobroot::Polynomial polynomial(const frobroot::RingPtr& ring, std::int64_t max_degree,
                                  std::size_t max_terms) {
    std::vector<frobroot::Term> terms;
    std::size_t count = 1 + below(max_terms);
    const std::uint64_t p = ring->characteristic();
    for (std::size_t i = 0; i < count; ++i) {
      auto c = static_cast<frobroot::PrimeField::Value>(1 + below(p - 1));
      terms.push_back({monomial_of(exponents(ring->num_variables(), max_degree)), c});
    }
    return frobroot::Polynomial::from_terms(ring, std::move(terms));
  }

 private:
  std::mt19937 rng_;
};

inline frobroot::Ideal ideal_from(const frobroot::RingPtr& ring, const std::vector<Exps>& gens) {
  std::vector<frobroot::Monomial> mons;
  for (const auto& g : gens) mons.push_back(monomial_of(g));
  return frobroot::Ideal::from_monomials(ring, mons);
}

}  // namespace oracle
