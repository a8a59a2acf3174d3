#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "crystal/graded.hpp"

namespace crystal {

/// Solution (r', s') of an Ore equation for the pair (r, s).
struct OreWitness {
  GradedElement r_prime;
  RingValue s_prime;
};

namespace detail {

inline void require_ore_inputs(const GradedElement& r, const RingValue& s) {
  const auto& alg = *r.algebra();
  if (!alg.ring().is_domain()) throw DomainError(alg.ring().name() + " is not a domain");
  if (!alg.validated()) throw DomainError("Ore witnesses need a datum that passed validation");
  if (alg.ring().is_zero(s)) throw DomainError("s must be nonzero");
}

// prod_g sigma_g(s), taken in group-index order.
inline RingValue orbit_product(const CrystalDatum& d, const RingValue& s) {
  RingValue acc = d.ring().one();
  for (std::size_t g = 0; g < d.order(); ++g) acc = d.ring().mul(acc, d.apply_sigma(g, s));
  return acc;
}

}  // namespace detail

/// Left Ore witness: s' r = r' s with s' = prod_g sigma_g(s).
///
/// Writing r = sum a_g u_g, the coefficient of u_g in r' is
/// b_g = a_g * prod_{h != g} sigma_h(s), so b_g sigma_g(s) = s' a_g.
inline OreWitness ore_witness(const GradedElement& r, const RingValue& s) {
  detail::require_ore_inputs(r, s);
  const auto& alg = r.algebra();
  const auto& d = alg->datum();
  const auto& R = d.ring();
  R.require(s);

  RingValue s_prime = detail::orbit_product(d, s);
  GradedElement r_prime(alg);
  for (const auto& [g, a] : r.terms()) {
    RingValue cofactor = R.one();
    for (std::size_t h = 0; h < d.order(); ++h)
      if (h != g) cofactor = R.mul(cofactor, d.apply_sigma(h, s));
    r_prime.accumulate(g, R.mul(a, cofactor));
  }

  if (GradedElement::scalar(alg, s_prime) * r != r_prime * GradedElement::scalar(alg, s))
    throw std::logic_error("left Ore witness failed to verify");
  return OreWitness{std::move(r_prime), std::move(s_prime)};
}

/// Right Ore witness: r s' = s r', mirrored from the left construction with
/// the same s'. Coefficients b_g = a_g sigma_g(s') / s by exact division.
inline OreWitness ore_witness_right(const GradedElement& r, const RingValue& s) {
  detail::require_ore_inputs(r, s);
  const auto& alg = r.algebra();
  const auto& d = alg->datum();
  const auto& R = d.ring();
  R.require(s);

  RingValue s_prime = detail::orbit_product(d, s);
  GradedElement r_prime(alg);
  for (const auto& [g, a] : r.terms()) {
    auto q = R.divide(R.mul(a, d.apply_sigma(g, s_prime)), s);
    if (!q) throw std::logic_error("right Ore construction: s does not divide a_g sigma_g(s')");
    r_prime.accumulate(g, *q);
  }

  if (r * GradedElement::scalar(alg, s_prime) != GradedElement::scalar(alg, s) * r_prime)
    throw std::logic_error("right Ore witness failed to verify");
  return OreWitness{std::move(r_prime), std::move(s_prime)};
}

struct RegularityResult {
  bool regular = true;
  std::optional<GradedElement> witness;  // nonzero x with a x = 0 or x a = 0
};

/// Whether a in R is a non-zero-divisor of A.
///
/// Domains use the shortcut a != 0. Finite algebras are searched
/// exhaustively, visiting elements with the u_e coefficient as the most
/// significant digit so that witnesses outside R = A_e are met first.
inline RegularityResult is_regular_in_A(const AlgebraPtr& alg, const RingValue& a,
                                        std::uint64_t max_size = 4096) {
  const auto& R = alg->ring();
  R.require(a);
  if (!alg->validated()) throw DomainError("regularity in A needs a datum that passed validation");
  if (!R.is_finite()) {
    if (!R.is_domain()) throw DomainError("regularity in A is undecidable over " + R.name());
    if (R.is_zero(a)) return RegularityResult{false, GradedElement::one(alg)};
    return RegularityResult{true, std::nullopt};
  }

  const auto as = GradedElement::scalar(alg, a);
  const std::uint64_t total = algebra_cardinality(*alg, max_size);
  const auto elems = R.enumerate();
  for (std::uint64_t i = 1; i < total; ++i) {
    auto x = algebra_element(alg, i, DigitOrder::identity_slowest, elems);
    if ((as * x).is_zero() || (x * as).is_zero()) return RegularityResult{false, std::move(x)};
  }
  return RegularityResult{true, std::nullopt};
}

}  // namespace crystal
