#pragma once

#include "frobroot/ideal.hpp"

#include <cstdint>
#include <map>

namespace frobroot {

/// f = sum over residues r of parts[r]^q * x^r, with every residue exponent
/// in [0, q). Components are nonzero.
struct QDecomposition {
  std::uint64_t q = 1;
  std::map<Monomial, Polynomial> parts;

  /// Rebuilds the source polynomial from the parts.
  Polynomial reconstruct(const RingPtr& ring) const;
};

/// I^[p^e]: generated by the p^e-th powers of the listed generators.
Ideal frobenius_power(const Ideal& ideal, std::uint64_t e);

/// Splits every exponent as a = q*b + r (q = p^e, e >= 1). Coefficients are
/// their own p^e-th roots in F_p.
QDecomposition q_decompose(const Polynomial& f, std::uint64_t e);

/// I^[1/p^e]: the smallest ideal J with I contained in J^[p^e], generated by
/// the q-adic components of the listed generators (e >= 1; e = 0 returns I).
Ideal frobenius_root(const Ideal& ideal, std::uint64_t e);

}  // namespace frobroot
