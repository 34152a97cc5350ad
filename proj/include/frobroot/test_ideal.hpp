#pragma once

#include "frobroot/groebner.hpp"
#include "frobroot/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace frobroot {

/// One factor a^t of a mixed product a_1^t_1 ... a_r^t_r. The ideal must be
/// nonzero.
struct ExponentedIdeal {
  Ideal ideal;
  RationalExponent exponent;
};

struct TauOptions {
  std::uint64_t max_e = 10;
  /// Multiplier d; unset means d = 1. A nondefault d yields a lower bound.
  std::optional<Polynomial> d;
  /// Require S_{e+2} = S_e before declaring stabilization at e.
  bool verify_stable = true;
};

struct ChainEntry {
  std::uint64_t e;
  /// (d * prod a_i^ceil(t_i p^e))^[1/p^e].
  Ideal term;
  /// S_e: sum of the terms up to e.
  Ideal partial_sum;
};

struct TestIdealResult {
  Ideal tau;
  std::uint64_t stabilized_at = 0;
  std::vector<ChainEntry> chain;
  bool truncated = false;
  /// Computed with d != 1: the result is only a lower bound.
  bool lower_bound = false;
};

/// frobenius_root((d) * prod a_i^ceil(t_i p^e), e); for e = 0 this is
/// (d) * prod a_i^ceil(t_i). Monomial input is handled combinatorially.
Ideal chain_term(std::span<const ExponentedIdeal> factors, std::uint64_t e,
                 const Polynomial* d = nullptr);
/// The same ideal computed through ideal_power / ideal_product /
/// frobenius_root with no monomial shortcut.
Ideal chain_term_generic(std::span<const ExponentedIdeal> factors,
                         std::uint64_t e, const Polynomial* d = nullptr);

/// Smallest e at which stabilization may be declared: p^e must reach every
/// exponent denominator.
std::uint64_t minimum_stable_exponent(std::span<const ExponentedIdeal> factors,
                                      std::uint64_t p);

/// The generalized test ideal tau(a_1^t_1 ... a_r^t_r) as the stabilized
/// ascending chain of Frobenius roots. Truncation is flagged, not thrown.
TestIdealResult tau(std::span<const ExponentedIdeal> factors,
                    const TauOptions& opts = {});

struct CertificateStep {
  std::uint64_t e;
  /// S_e with its reduced Groebner basis.
  Ideal ideal;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> cofactors;
  /// sum_i cofactors[i] * basis[i].
  Polynomial piece;
};

/// c = sum over steps of sum_i cofactors[i] * basis[i].
struct Certificate {
  Polynomial element;
  std::uint64_t e1 = 0;
  std::vector<CertificateStep> per_e;

  Polynomial reconstruct() const;
  /// Reconstruction is exact and every basis element lies in its ideal.
  bool verify() const;
};

struct NotMember {
  TestIdealResult tau;
};

/// Throws ErrorCode::truncated if neither membership nor stabilization
/// happened by opts.max_e.
std::variant<Certificate, NotMember> certify_membership(
    const Polynomial& c, std::span<const ExponentedIdeal> factors,
    const TauOptions& opts = {});

struct SkodaRow {
  std::uint64_t k;
  Ideal lhs;  ///< tau(a^k b^t)
  Ideal rhs;  ///< tau(a^(k-1) b^t) * a
  bool equal;
};

struct SkodaReport {
  std::uint64_t l;
  std::vector<SkodaRow> rows;
  bool all_equal() const;
};

/// For k = l..l+n_max compares tau(a^k b^t) with tau(a^(k-1) b^t) * a. l must
/// be the number of listed generators of a. Throws truncated.
SkodaReport skoda_check(const Ideal& a, const Ideal& b,
                        const RationalExponent& t, std::uint64_t l,
                        std::uint64_t n_max, const TauOptions& opts = {});

struct BrianconSkodaRow {
  std::uint64_t n;
  Ideal tau;    ///< tau(a^(n+l-1))
  Ideal power;  ///< a^n
  IdealRelation relation;
  bool holds;
};

struct BrianconSkodaReport {
  std::uint64_t l;
  std::vector<BrianconSkodaRow> rows;
  bool all_hold() const;
};

BrianconSkodaReport briancon_skoda_check(const Ideal& a, std::uint64_t l,
                                         std::uint64_t n_max,
                                         const TauOptions& opts = {});

struct StrictnessReport {
  Ideal tau;
  Ideal colon;  ///< (a : m)
  bool contained;         ///< a in tau(a)
  bool strict;            ///< a != tau(a)
  bool colon_contained;   ///< (a : m) in tau(a)
  std::optional<Polynomial> witness;  ///< generator of tau(a) outside a
  bool holds() const { return contained && strict && colon_contained; }
};

/// Requires at least two variables and an m-primary a. Throws not_m_primary.
StrictnessReport strictness_check(const Ideal& a, const TauOptions& opts = {});

/// The radical of a is the irrelevant ideal: a is zero-dimensional and every
/// variable is nilpotent modulo a.
bool is_m_primary(const Ideal& a);

struct ThresholdResult {
  RationalExponent lower;
  RationalExponent upper;
  /// The jump is at `upper` (interval degenerate) among rationals with
  /// denominator <= max_den.
  bool exact = false;
  /// r/p^E strictly between the bracketing rationals used for the exactness
  /// decision.
  std::optional<RationalExponent> probe;
  Ideal tau_lower;
  Ideal tau_upper;
  std::size_t evaluations = 0;
};

/// Bracket the first jump of t -> tau(a^t) in (lo, hi]. Throws
/// no_jump_in_window if tau(a^lo) = tau(a^hi).
ThresholdResult threshold_search(const Ideal& a, const RationalExponent& lo,
                                 const RationalExponent& hi,
                                 std::uint64_t max_den,
                                 const TauOptions& opts = {});

struct SubadditivityReport {
  Ideal lhs;  ///< tau(a^(s+t))
  Ideal rhs;  ///< tau(a^s) * tau(a^t)
  bool holds;
};

SubadditivityReport subadditivity_check(const Ideal& a,
                                        const RationalExponent& s,
                                        const RationalExponent& t,
                                        const TauOptions& opts = {});

}  // namespace frobroot
