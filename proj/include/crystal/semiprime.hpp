#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystal/graded.hpp"

namespace crystal {

inline constexpr std::uint64_t default_semiprime_cap = 4096;

struct SemiprimeVerdict {
  bool semiprime = true;
  std::optional<GradedElement> witness;  // nonzero x with x A x = 0
  std::string method = "exhaustive";
  /// char R does not divide |G|: the hypothesis under which semiprimeness is expected.
  bool characteristic_coprime = true;
};

inline bool characteristic_coprime(const CrystalDatum& d) {
  const auto c = d.ring().characteristic();
  return c == 0 || d.order() % static_cast<std::size_t>(c) != 0;
}

namespace detail {

inline void require_finite_validated(const AlgebraPtr& alg) {
  if (!alg->ring().is_finite()) throw DomainError("semiprime tests need a finite ring, got " + alg->ring().name());
  if (!alg->validated()) throw DomainError("semiprime tests need a datum that passed validation");
}

inline bool sandwich_vanishes(const GradedElement& x, const std::vector<GradedElement>& all) {
  for (const auto& a : all)
    if (!(x * a * x).is_zero()) return false;
  return true;
}

}  // namespace detail

/// x A x = 0 checked against every a in A.
inline bool verify_semiprime_witness(const GradedElement& x, std::uint64_t max_size = default_semiprime_cap) {
  if (x.is_zero()) return false;
  return detail::sandwich_vanishes(x, enumerate_algebra(x.algebra(), max_size));
}

/// A is semiprime iff x A x = 0 forces x = 0. Both x and a range over all of A.
inline SemiprimeVerdict is_semiprime_finite(const AlgebraPtr& alg, std::uint64_t max_size = default_semiprime_cap) {
  detail::require_finite_validated(alg);
  const auto all = enumerate_algebra(alg, max_size);
  SemiprimeVerdict v;
  v.characteristic_coprime = characteristic_coprime(alg->datum());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (detail::sandwich_vanishes(all[i], all)) {
      v.semiprime = false;
      v.witness = all[i];
      break;
    }
  }
  return v;
}

/// Smallest k >= 1 with x^k = 0, or nullopt if x is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const GradedElement& x, std::size_t limit) {
  GradedElement power = x;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (power.is_zero()) return k;
    power = power * x;
  }
  return std::nullopt;
}

/// Nonzero x in the nilradical: a x is nilpotent for every a in A, so A x is
/// a nil left ideal and A x A is nilpotent. Absent iff the (finite) algebra
/// has zero nilradical.
inline std::optional<GradedElement> nilpotent_witness(const AlgebraPtr& alg,
                                                      std::uint64_t max_size = default_semiprime_cap) {
  detail::require_finite_validated(alg);
  const auto all = enumerate_algebra(alg, max_size);
  // x^k A is a strictly decreasing chain of subgroups until it reaches 0, so a
  // nilpotent element of A has index at most log2 |A| + 1.
  std::size_t limit = 1;
  for (std::size_t size = all.size(); size > 1; size >>= 1U) ++limit;
  for (std::size_t i = 1; i < all.size(); ++i) {
    bool nil = true;
    for (const auto& a : all) {
      if (!nilpotency_index(a * all[i], limit)) {
        nil = false;
        break;
      }
    }
    if (nil) return all[i];
  }
  return std::nullopt;
}

}  // namespace crystal
