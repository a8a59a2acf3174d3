#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "crystal/datum.hpp"
#include "crystal/fraction_field.hpp"
#include "crystal/validation.hpp"

namespace crystal {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A = sum_g R u_g built from a datum, together with its validation report.
/// Elements keep a shared pointer to the algebra they belong to.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr make(CrystalDatum d) {
    auto alg = std::shared_ptr<Algebra>(new Algebra(std::move(d)));
    const auto& R = alg->datum_.ring();
    if (R.is_domain() && !R.is_field()) alg->fraction_ = make(to_fraction_field(alg->datum_).datum);
    return alg;
  }

  const CrystalDatum& datum() const noexcept { return datum_; }
  const BaseRing& ring() const noexcept { return datum_.ring(); }
  const Group& group() const noexcept { return datum_.group(); }
  const ValidationReport& report() const noexcept { return report_; }

  /// True when the multiplication rule is known to be associative.
  bool validated() const noexcept { return report_.pre_crystalline_consistent; }
  bool crystalline() const noexcept { return report_.crystalline; }

  /// The same algebra over Frac(R). Returns itself when R is already a field
  /// or is not a domain.
  AlgebraPtr fraction() const { return fraction_ ? fraction_ : shared_from_this(); }

 private:
  explicit Algebra(CrystalDatum d) : datum_(std::move(d)), report_(validate_datum(datum_)) {}

  CrystalDatum datum_;
  ValidationReport report_;
  AlgebraPtr fraction_;
};

/// Element sum_g a_g u_g of A. Zero coefficients are never stored, so
/// equality of representations is equality of elements.
class GradedElement {
 public:
  explicit GradedElement(AlgebraPtr alg) : alg_(std::move(alg)) {
    if (!alg_) throw InputError("graded element needs an algebra");
  }

  static GradedElement homogeneous(AlgebraPtr alg, std::size_t g, RingValue r) {
    GradedElement x(std::move(alg));
    x.accumulate(g, std::move(r));
    return x;
  }

  static GradedElement scalar(AlgebraPtr alg, RingValue r) {
    return homogeneous(std::move(alg), Group::identity, std::move(r));
  }

  /// 1 * u_g
  static GradedElement basis(AlgebraPtr alg, std::size_t g) {
    RingValue one = alg->ring().one();
    return homogeneous(std::move(alg), g, std::move(one));
  }

  static GradedElement one(AlgebraPtr alg) { return basis(std::move(alg), Group::identity); }

  /// Repeated indices are summed.
  static GradedElement from_terms(AlgebraPtr alg, const std::vector<std::pair<std::size_t, RingValue>>& terms) {
    GradedElement x(std::move(alg));
    for (const auto& [g, r] : terms) x.accumulate(g, r);
    return x;
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const std::map<std::size_t, RingValue>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (const auto& [g, r] : terms_) out.push_back(g);
    return out;
  }

  RingValue component(std::size_t g) const {
    if (g >= alg_->group().order()) throw InputError("group index out of range");
    auto it = terms_.find(g);
    return it == terms_.end() ? alg_->ring().zero() : it->second;
  }

  void accumulate(std::size_t g, const RingValue& r) {
    const auto& R = alg_->ring();
    if (g >= alg_->group().order()) throw InputError("group index out of range");
    R.require(r);
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      if (!R.is_zero(r)) terms_.emplace(g, r);
      return;
    }
    it->second = R.add(it->second, r);
    if (R.is_zero(it->second)) terms_.erase(it);
  }

  bool operator==(const GradedElement& other) const {
    return same_algebra(*this, other) && terms_ == other.terms_;
  }

  friend bool same_algebra(const GradedElement& x, const GradedElement& y) {
    return x.alg_ == y.alg_ || x.alg_->datum() == y.alg_->datum();
  }

 private:
  AlgebraPtr alg_;
  std::map<std::size_t, RingValue> terms_;
};

namespace detail {

inline void require_same(const GradedElement& x, const GradedElement& y) {
  if (!same_algebra(x, y)) throw InputError("graded elements belong to different data");
}

}  // namespace detail

inline GradedElement operator+(const GradedElement& x, const GradedElement& y) {
  detail::require_same(x, y);
  GradedElement out = x;
  for (const auto& [g, r] : y.terms()) out.accumulate(g, r);
  return out;
}

inline GradedElement operator-(const GradedElement& x) {
  GradedElement out(x.algebra());
  for (const auto& [g, r] : x.terms()) out.accumulate(g, x.algebra()->ring().neg(r));
  return out;
}

inline GradedElement operator-(const GradedElement& x, const GradedElement& y) { return x + (-y); }

/// (a u_g)(b u_h) = a sigma_g(b) alpha(g, h) u_{gh}, extended bilinearly.
inline GradedElement operator*(const GradedElement& x, const GradedElement& y) {
  detail::require_same(x, y);
  const auto& alg = *x.algebra();
  if (!alg.validated()) throw DomainError("multiplication needs a datum that passed validation");
  const auto& d = alg.datum();
  const auto& R = d.ring();
  GradedElement out(x.algebra());
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) {
      RingValue c = R.mul(R.mul(a, d.apply_sigma(g, b)), d.alpha(g, h));
      out.accumulate(d.group().mul(g, h), c);
    }
  }
  return out;
}

/// r * x for r in R (left scalar multiplication).
inline GradedElement scale(const RingValue& r, const GradedElement& x) {
  GradedElement out(x.algebra());
  const auto& R = x.algebra()->ring();
  for (const auto& [g, a] : x.terms()) out.accumulate(g, R.mul(r, a));
  return out;
}

inline GradedElement ge_add(const GradedElement& x, const GradedElement& y) { return x + y; }
inline GradedElement ge_mul(const GradedElement& x, const GradedElement& y) { return x * y; }

inline RingValue homogeneous_component(const GradedElement& x, std::size_t g) { return x.component(g); }

/// Image of x in another algebra with the same group, coefficients mapped by
/// the embedding of x's ring into its fraction field.
inline GradedElement embed(const GradedElement& x, const AlgebraPtr& target) {
  const auto& R = x.algebra()->ring();
  GradedElement out(target);
  for (const auto& [g, a] : x.terms())
    out.accumulate(g, R == target->ring() ? a : R.to_fraction_field(a));
  return out;
}

/// Two-sided inverse of u_g, namely alpha(g^-1, g)^-1 u_{g^-1}.
///
/// Over a domain the result lives in the fraction-field algebra; otherwise it
/// needs alpha(g^-1, g) to be a unit of R and stays in the same algebra.
inline GradedElement basis_inverse(const AlgebraPtr& alg, std::size_t g) {
  if (!alg->crystalline()) throw DomainError("non-crystalline datum: some alpha value is not regular");
  const auto& G = alg->group();
  const std::size_t gi = G.inverse(g);
  AlgebraPtr target = alg->ring().is_domain() ? alg->fraction() : alg;
  const auto& d = target->datum();
  auto inv = d.ring().try_invert(d.alpha(gi, g));
  if (!inv) throw DomainError("alpha(g^-1, g) is not invertible in " + d.ring().name());
  GradedElement v = GradedElement::homogeneous(target, gi, *inv);
  const auto ug = GradedElement::basis(target, g);
  const auto one = GradedElement::one(target);
  if (ug * v != one || v * ug != one) throw std::logic_error("basis inverse failed to verify");
  return v;
}

/// Mixed-radix position of an element of a finite algebra: each u_g
/// coefficient is one digit, indexed by its position in the ring enumeration.
enum class DigitOrder {
  identity_fastest,  // digit weight |R|^g
  identity_slowest,  // digit weight |R|^(n-1-g)
};

inline std::uint64_t algebra_cardinality(const Algebra& alg, std::uint64_t cap) {
  const auto card = alg.ring().cardinality();
  if (!card) throw DomainError("algebra over infinite ring " + alg.ring().name() + " cannot be enumerated");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < alg.group().order(); ++i) {
    if (total > cap / *card) throw DomainError("|A| exceeds the size cap of " + std::to_string(cap));
    total *= *card;
  }
  return total;
}

inline GradedElement algebra_element(const AlgebraPtr& alg, std::uint64_t index, DigitOrder order,
                                     const std::vector<RingValue>& ring_elements) {
  const std::size_t n = alg->group().order();
  const std::uint64_t base = ring_elements.size();
  GradedElement x(alg);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t g = order == DigitOrder::identity_fastest ? k : n - 1 - k;
    x.accumulate(g, ring_elements[index % base]);
    index /= base;
  }
  return x;
}

/// Every element of a finite algebra, in the given digit order.
inline std::vector<GradedElement> enumerate_algebra(const AlgebraPtr& alg, std::uint64_t cap,
                                                    DigitOrder order = DigitOrder::identity_fastest) {
  const std::uint64_t total = algebra_cardinality(*alg, cap);
  const auto elems = alg->ring().enumerate();
  std::vector<GradedElement> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(algebra_element(alg, i, order, elems));
  return out;
}

}  // namespace crystal
