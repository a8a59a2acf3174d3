#pragma once

#include <span>
#include <vector>

#include "crystal/datum.hpp"

namespace crystal {

/// Datum whose ring has been replaced by the quotient field of the original.
/// sigma and alpha are carried over through the embedding R -> Frac(R).
struct LocalizedDatum {
  CrystalDatum datum;
  BaseRing original_ring;
};

/// Lifts a datum over a commutative domain to its quotient field.
inline LocalizedDatum to_fraction_field(const CrystalDatum& d) {
  const auto& R = d.ring();
  if (!R.is_domain()) throw DomainError(R.name() + " is not a domain");
  BaseRing K = R.fraction_field();
  return LocalizedDatum{d.rebase(K, [&R](const RingValue& v) { return R.to_fraction_field(v); }), R};
}

/// Nonzero element lying in every principal ideal R*s_i.
///
/// Z and Q: least common multiple (for Q, lcm of numerators over gcd of
/// denominators). Quadratic rings: the product. Divisibility by every s_i is
/// verified before returning.
inline RingValue common_multiple(const BaseRing& ring, std::span<const RingValue> s) {
  if (s.empty()) throw InputError("common multiple of an empty list");
  if (!ring.is_domain()) throw DomainError(ring.name() + " is not a domain");
  for (const auto& v : s)
    if (ring.is_zero(v)) throw DomainError("common multiple of a list containing zero");

  RingValue result = ring.one();
  switch (ring.kind()) {
    case RingKind::integer: {
      Integer acc = 1;
      for (const auto& v : s) {
        Integer x = abs(std::get<Integer>(v));
        acc = acc / boost::multiprecision::gcd(acc, x) * x;
      }
      result = acc;
      break;
    }
    case RingKind::rational: {
      Integer num = 1, den = 0;
      for (const auto& v : s) {
        const auto& q = std::get<Rational>(v);
        Integer n = abs(boost::multiprecision::numerator(q));
        num = num / boost::multiprecision::gcd(num, n) * n;
        den = boost::multiprecision::gcd(den, boost::multiprecision::denominator(q));
      }
      result = Rational(num, den);
      break;
    }
    default:
      for (const auto& v : s) result = ring.mul(result, v);
  }

  for (const auto& v : s)
    if (!ring.divide(result, v)) throw std::logic_error("common multiple is not divisible by an input");
  return result;
}

inline RingValue common_multiple(const BaseRing& ring, const std::vector<RingValue>& s) {
  return common_multiple(ring, std::span<const RingValue>(s));
}

}  // namespace crystal
