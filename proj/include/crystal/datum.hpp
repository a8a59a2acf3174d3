#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crystal/base_ring.hpp"
#include "crystal/group.hpp"

namespace crystal {

/// The twisting data (R, G, sigma, alpha) of A = sum_g R u_g, with
/// u_g r = sigma_g(r) u_g and u_g u_h = alpha(g, h) u_{gh}.
///
/// Construction only checks shapes and kinds. The algebraic identities are
/// evaluated by validate_datum().
class CrystalDatum {
 public:
  /// alpha is row-major: alpha[g * |G| + h] = alpha(g, h).
  /// samples are extra ring elements used when an identity quantified over
  /// all of R has to be checked on an infinite ring.
  CrystalDatum(BaseRing ring, Group group, std::vector<Automorphism> sigma, std::vector<RingValue> alpha,
               std::vector<RingValue> samples = {})
      : ring_(std::move(ring)),
        group_(std::move(group)),
        sigma_(std::move(sigma)),
        alpha_(std::move(alpha)),
        samples_(std::move(samples)) {
    const std::size_t n = group_.order();
    if (sigma_.size() != n)
      throw InputError("sigma has " + std::to_string(sigma_.size()) + " entries, group order is " +
                       std::to_string(n));
    if (alpha_.size() != n * n) throw InputError("alpha table must be |G| x |G|");
    for (Automorphism s : sigma_)
      if (!ring_.admits(s))
        throw InputError(std::string("automorphism '") + to_string(s) + "' does not act on " + ring_.name());
    for (const auto& v : alpha_) ring_.require(v);
    for (const auto& v : samples_) ring_.require(v);
  }

  /// Convenience for the common case sigma = identity everywhere.
  static CrystalDatum untwisted(BaseRing ring, Group group, std::vector<RingValue> alpha) {
    std::vector<Automorphism> sigma(group.order(), Automorphism::identity);
    return CrystalDatum(std::move(ring), std::move(group), std::move(sigma), std::move(alpha));
  }

  /// Group ring R[G]: sigma trivial, alpha = 1.
  static CrystalDatum group_ring(BaseRing ring, Group group) {
    std::vector<RingValue> alpha(group.order() * group.order(), ring.one());
    return untwisted(std::move(ring), std::move(group), std::move(alpha));
  }

  const BaseRing& ring() const noexcept { return ring_; }
  const Group& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }

  Automorphism sigma(std::size_t g) const { return sigma_.at(g); }
  const std::vector<Automorphism>& sigmas() const noexcept { return sigma_; }

  const RingValue& alpha(std::size_t g, std::size_t h) const {
    if (g >= order() || h >= order()) throw InputError("alpha index out of range");
    return alpha_[g * order() + h];
  }
  const std::vector<RingValue>& alphas() const noexcept { return alpha_; }
  const std::vector<RingValue>& samples() const noexcept { return samples_; }

  RingValue apply_sigma(std::size_t g, const RingValue& r) const { return ring_.apply(sigma(g), r); }
  RingValue apply_sigma_inverse(std::size_t g, const RingValue& r) const {
    return ring_.apply(inverse(sigma(g)), r);
  }

  CrystalDatum with_alpha(std::size_t g, std::size_t h, RingValue value) const {
    auto alpha = alpha_;
    alpha.at(g * order() + h) = std::move(value);
    return CrystalDatum(ring_, group_, sigma_, std::move(alpha), samples_);
  }

  CrystalDatum with_samples(std::vector<RingValue> samples) const {
    return CrystalDatum(ring_, group_, sigma_, alpha_, std::move(samples));
  }

  /// Same sigma and alpha over another ring; values are mapped by `embed`.
  template <typename Embed>
  CrystalDatum rebase(BaseRing target, Embed&& embed) const {
    std::vector<RingValue> alpha, samples;
    alpha.reserve(alpha_.size());
    for (const auto& v : alpha_) alpha.push_back(embed(v));
    for (const auto& v : samples_) samples.push_back(embed(v));
    return CrystalDatum(std::move(target), group_, sigma_, std::move(alpha), std::move(samples));
  }

  bool operator==(const CrystalDatum& other) const {
    return ring_ == other.ring_ && group_ == other.group_ && sigma_ == other.sigma_ && alpha_ == other.alpha_ &&
           samples_ == other.samples_;
  }

 private:
  BaseRing ring_;
  Group group_;
  std::vector<Automorphism> sigma_;
  std::vector<RingValue> alpha_;
  std::vector<RingValue> samples_;
};

}  // namespace crystal
