#include "frobroot/monomial_ideal.hpp"

#include "frobroot/error.hpp"

#include <algorithm>

namespace frobroot::monomial_ideal {

namespace {

std::vector<Monomial> minimalize_plane(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  std::vector<Monomial> kept;
  bool first = true;
  Exponent min_y = 0;
  for (auto& m : gens) {
    if (first || m[1] < min_y) {
      min_y = m[1];
      first = false;
      kept.push_back(std::move(m));
    }
  }
  return kept;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  if (gens.front().size() == 2) return minimalize_plane(std::move(gens));
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    if (m.is_one()) return {std::move(m)};
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool contains(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> product(std::span<const Monomial> a,
                              std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return minimalize(std::move(out));
}

std::vector<Monomial> power(std::span<const Monomial> a, std::uint64_t k) {
  if (a.empty()) {
    if (k == 0) fail(ErrorCode::invalid_argument, "power of an empty generator list needs a ring");
    return {};
  }
  std::vector<Monomial> result{Monomial(a.front().size())};
  std::vector<Monomial> base(a.begin(), a.end());
  base = minimalize(std::move(base));
  while (k > 0) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return result;
}

std::vector<Monomial> intersection(std::span<const Monomial> a,
                                   std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x.lcm(y));
  }
  return minimalize(std::move(out));
}

std::vector<Monomial> quotient(std::span<const Monomial> a, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.saturating_sub(m));
  return minimalize(std::move(out));
}

std::vector<Monomial> colon(std::span<const Monomial> a,
                            std::span<const Monomial> b) {
  if (b.empty()) fail(ErrorCode::zero_divisor_ideal, "colon by the zero ideal");
  std::vector<Monomial> result = quotient(a, b.front());
  for (std::size_t i = 1; i < b.size(); ++i) {
    result = intersection(result, quotient(a, b[i]));
  }
  return result;
}

std::vector<Monomial> frobenius_root(std::span<const Monomial> a,
                                     std::uint64_t q) {
  std::vector<Monomial> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.floor_div(q));
  return minimalize(std::move(out));
}

}  // namespace frobroot::monomial_ideal
