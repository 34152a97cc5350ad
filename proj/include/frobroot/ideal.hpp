#pragma once

#include "frobroot/polynomial.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace frobroot {

/// A finitely generated ideal. The reduced Groebner basis for the ring's order
/// is computed on first use and shared by all copies of the value.
class Ideal {
 public:
  /// Drops zero generators; throws ring_mismatch if a generator lives
  /// elsewhere. The zero ideal has no generators.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal from_monomials(RingPtr ring, std::span<const Monomial> gens);
  /// The irrelevant ideal (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  /// Every generator is a single term.
  bool is_monomial() const noexcept { return monomial_; }
  bool is_unit() const;

  /// The unique reduced Groebner basis: monic, interreduced, sorted
  /// descending by leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  /// Minimal monomial generators; requires is_monomial().
  std::vector<Monomial> monomial_generators() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool monomial_ = true;
  std::shared_ptr<Cache> cache_;
};

/// "(g1, g2, ...)" over the reduced Groebner basis; "(0)" for the zero ideal.
std::string to_string(const Ideal& ideal);
/// Generators of the reduced Groebner basis as strings.
std::vector<std::string> generator_strings(const Ideal& ideal);
/// Comma-separated polynomial list, e.g. `x^2, y^3`.
Ideal parse_ideal(const RingPtr& ring, std::string_view text);

}  // namespace frobroot
