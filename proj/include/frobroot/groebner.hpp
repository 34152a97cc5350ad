#pragma once

#include "frobroot/ideal.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace frobroot {

/// Full reduction of f by the list G (first divisor in list order wins).
/// The remainder has no term divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);

struct TrackedReduction {
  Polynomial remainder;
  /// f = sum_i cofactors[i] * G[i] + remainder.
  std::vector<Polynomial> cofactors;
};

TrackedReduction reduce_tracked(const Polynomial& f,
                                std::span<const Polynomial> G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens`. Normal selection
/// with the product and chain criteria. Always runs Buchberger, even on
/// monomial input.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   BuchbergerStats* stats = nullptr);

enum class IdealRelation { equal, first_in_second, second_in_first, incomparable };

const char* to_string(IdealRelation r) noexcept;

bool is_member(const Polynomial& f, const Ideal& ideal);
/// a is contained in b.
bool is_contained(const Ideal& a, const Ideal& b);
bool ideals_equal(const Ideal& a, const Ideal& b);
IdealRelation compare_ideals(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::uint64_t k);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (a : g) for a single nonzero polynomial.
Ideal ideal_quotient(const Ideal& a, const Polynomial& g);
/// (a : b); throws zero_divisor_ideal if b = 0.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// The Groebner-basis routes, bypassing the monomial fast paths. Exposed so
/// the two routes can be checked against each other.
namespace generic {
bool is_member(const Polynomial& f, std::span<const Polynomial> gens);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersection(const Ideal& a, const Ideal& b);
Ideal quotient(const Ideal& a, const Polynomial& g);
Ideal colon(const Ideal& a, const Ideal& b);
}  // namespace generic

}  // namespace frobroot
