#include "frobroot/ideal.hpp"

#include "frobroot/error.hpp"
#include "frobroot/groebner.hpp"
#include "frobroot/monomial_ideal.hpp"

#include <algorithm>

namespace frobroot {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_monomial()) monomial_ = false;
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::from_monomials(RingPtr ring, std::span<const Monomial> gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& m : gens) polys.push_back(Polynomial::term(ring, m, 1));
  return Ideal(std::move(ring), std::move(polys));
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    vars.push_back(Polynomial::variable(ring, i));
  }
  return Ideal(std::move(ring), std::move(vars));
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

std::vector<Monomial> Ideal::monomial_generators() const {
  if (!monomial_) {
    fail(ErrorCode::invalid_argument, "ideal is not generated by monomials");
  }
  std::vector<Monomial> mons;
  mons.reserve(gens_.size());
  for (const auto& g : gens_) mons.push_back(g.leading_monomial());
  return monomial_ideal::minimalize(std::move(mons));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    if (monomial_) {
      auto mons = monomial_generators();
      std::vector<Polynomial> basis;
      basis.reserve(mons.size());
      for (auto& m : mons) basis.push_back(Polynomial::term(ring_, std::move(m), 1));
      const auto& order = ring_->order();
      std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), order) ==
               std::strong_ordering::greater;
      });
      cache_->basis = std::move(basis);
    } else {
      cache_->basis = buchberger(gens_);
    }
  });
  return cache_->basis;
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis()) out.push_back(to_string(g));
  return out;
}

std::string to_string(const Ideal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& s : generator_strings(ideal)) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + ")";
}

Ideal parse_ideal(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> gens;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')' && depth > 0) --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      try {
        gens.push_back(parse_polynomial(ring, piece));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::syntax_error) throw;
        fail(ErrorCode::syntax_error, "generator " + std::to_string(gens.size() + 1) +
                                          " (offset " + std::to_string(start) + "): " + e.what());
      }
      start = i + 1;
    }
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace frobroot
