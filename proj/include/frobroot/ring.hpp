#pragma once

#include "frobroot/field.hpp"
#include "frobroot/monomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frobroot {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// F_p[x_1, ..., x_n] with a fixed monomial order. Shared immutably by every
/// polynomial and ideal living in it.
class Ring {
 public:
  /// Validates the prime, the variable names ([A-Za-z][A-Za-z0-9_]*, unique,
  /// at least one) and the order.
  static RingPtr create(std::uint64_t p, std::vector<std::string> variables,
                        MonomialOrder order = {});

  const PrimeField& field() const noexcept { return field_; }
  PrimeField::Value characteristic() const noexcept {
    return field_.characteristic();
  }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Same field and the same ordered variables.
  bool same_as(const Ring& other) const noexcept;

  /// A ring with `count` fresh auxiliary variables prepended and the
  /// corresponding elimination order.
  RingPtr with_elimination_variables(std::size_t count) const;

 private:
  Ring(PrimeField field, std::vector<std::string> variables,
       MonomialOrder order)
      : field_(field), variables_(std::move(variables)), order_(order) {}

  PrimeField field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

bool is_valid_variable_name(std::string_view name) noexcept;

/// Throws ring_mismatch unless both rings are the same.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace frobroot
