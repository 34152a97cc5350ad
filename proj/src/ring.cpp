#include "frobroot/ring.hpp"

#include "frobroot/error.hpp"

#include <algorithm>
#include <cctype>

namespace frobroot {

bool is_valid_variable_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingPtr Ring::create(std::uint64_t p, std::vector<std::string> variables,
                     MonomialOrder order) {
  PrimeField field(p);
  if (variables.empty()) {
    fail(ErrorCode::invalid_argument, "a ring needs at least one variable");
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!is_valid_variable_name(variables[i])) {
      fail(ErrorCode::invalid_argument,
           "invalid variable name '" + variables[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) {
        fail(ErrorCode::invalid_argument,
             "duplicate variable name '" + variables[i] + "'");
      }
    }
  }
  if (order.weighted_prefix > variables.size()) {
    fail(ErrorCode::invalid_argument, "elimination block exceeds arity");
  }
  return RingPtr(new Ring(field, std::move(variables), order));
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::same_as(const Ring& other) const noexcept {
  return this == &other ||
         (field_ == other.field_ && order_ == other.order_ &&
          variables_ == other.variables_);
}

RingPtr Ring::with_elimination_variables(std::size_t count) const {
  std::vector<std::string> names;
  names.reserve(variables_.size() + count);
  std::size_t suffix = 0;
  while (names.size() < count) {
    std::string candidate = "t" + std::to_string(suffix++);
    if (!variable_index(candidate)) names.push_back(candidate);
  }
  names.insert(names.end(), variables_.begin(), variables_.end());
  if (order_.weighted_prefix != 0) {
    fail(ErrorCode::invalid_argument, "ring already has an elimination block");
  }
  MonomialOrder order = order_;
  order.weighted_prefix = count;
  return create(field_.characteristic(), std::move(names), order);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) {
    fail(ErrorCode::ring_mismatch, "operands live in different rings");
  }
}

}  // namespace frobroot
