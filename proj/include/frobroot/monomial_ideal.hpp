#pragma once

#include "frobroot/monomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

/// Exponent-vector combinatorics for ideals generated by monomials. These are
/// the fast paths behind Ideal operations when every generator is a monomial;
/// results are minimal generating sets sorted in exponent-key order.
namespace frobroot::monomial_ideal {

std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// True iff some generator divides m. `gens` need not be minimal.
bool contains(std::span<const Monomial> gens, const Monomial& m);

std::vector<Monomial> product(std::span<const Monomial> a,
                              std::span<const Monomial> b);
std::vector<Monomial> power(std::span<const Monomial> a, std::uint64_t k);
std::vector<Monomial> intersection(std::span<const Monomial> a,
                                   std::span<const Monomial> b);
/// (a : m) for a single monomial m.
std::vector<Monomial> quotient(std::span<const Monomial> a, const Monomial& m);
/// (a : b); b must be nonempty.
std::vector<Monomial> colon(std::span<const Monomial> a,
                            std::span<const Monomial> b);
/// The smallest monomial ideal J with a contained in J^[q]: floor division.
std::vector<Monomial> frobenius_root(std::span<const Monomial> a,
                                     std::uint64_t q);

}  // namespace frobroot::monomial_ideal
