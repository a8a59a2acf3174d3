#pragma once

#include <string>
#include <vector>

#include "crystal/graded.hpp"

namespace crystal {

struct LemmaReport {
  std::vector<CheckResult> checks;  // "identity1" .. "identity4"

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw InputError("no check named " + name);
  }
};

/// Evaluates both sides of the basis-inverse identities over Frac(R):
///   identity1: u_g^-1 = u_{g^-1} alpha(g, g^-1)^-1 = alpha(g^-1, g)^-1 u_{g^-1}
///   identity2: sigma_g^-1(x) u_g^-1 = u_g^-1 x                  (all g, sampled x)
///   identity3: sigma_{hg}^-1(alpha(h, g)) = sigma_g^-1(sigma_h^-1(alpha(h, g)))
///   identity4: sigma_g^-1(alpha(g, g^-1 h)) = alpha(g^-1, h)^-1 sigma_g^-1(alpha(g, g^-1))
/// Samples may be given in R or in Frac(R).
inline LemmaReport check_lemma_identities(const AlgebraPtr& alg, const std::vector<RingValue>& samples) {
  if (!alg->ring().is_domain()) throw DomainError(alg->ring().name() + " is not a domain");
  if (!alg->crystalline()) throw DomainError("non-crystalline datum: some alpha value is not regular");

  const AlgebraPtr K = alg->fraction();
  const auto& d = K->datum();
  const auto& F = d.ring();
  const auto& G = d.group();
  const std::size_t n = G.order();
  auto inv = [&F](const RingValue& v) { return *F.try_invert(v); };

  std::vector<RingValue> xs;
  for (const auto& x : samples) xs.push_back(F.contains(x) ? x : alg->ring().to_fraction_field(x));

  std::vector<GradedElement> ug_inv;
  for (std::size_t g = 0; g < n; ++g) ug_inv.push_back(basis_inverse(alg, g));

  CheckResult id1{"identity1"};
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gi = G.inverse(g);
    auto right_form = GradedElement::basis(K, gi) * GradedElement::scalar(K, inv(d.alpha(g, gi)));
    auto left_form = GradedElement::homogeneous(K, gi, inv(d.alpha(gi, g)));
    auto ug = GradedElement::basis(K, g);
    auto one = GradedElement::one(K);
    bool ok = right_form == left_form && ug * right_form == one && right_form * ug == one && left_form == ug_inv[g];
    id1.record(ok, Witness{{g}, {}});
  }

  CheckResult id2{"identity2"};
  for (std::size_t g = 0; g < n; ++g) {
    for (const auto& x : xs) {
      auto lhs = GradedElement::scalar(K, d.apply_sigma_inverse(g, x)) * ug_inv[g];
      auto rhs = ug_inv[g] * GradedElement::scalar(K, x);
      id2.record(lhs == rhs, Witness{{g}, x});
    }
  }

  CheckResult id3{"identity3"};
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      const RingValue& a = d.alpha(h, g);
      RingValue lhs = d.apply_sigma_inverse(G.mul(h, g), a);
      RingValue rhs = d.apply_sigma_inverse(g, d.apply_sigma_inverse(h, a));
      id3.record(lhs == rhs, Witness{{h, g}, {}});
    }
  }

  CheckResult id4{"identity4"};
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gi = G.inverse(g);
    for (std::size_t h = 0; h < n; ++h) {
      RingValue lhs = d.apply_sigma_inverse(g, d.alpha(g, G.mul(gi, h)));
      RingValue rhs = F.mul(inv(d.alpha(gi, h)), d.apply_sigma_inverse(g, d.alpha(g, gi)));
      id4.record(lhs == rhs, Witness{{g, h}, {}});
    }
  }

  return LemmaReport{{std::move(id1), std::move(id2), std::move(id3), std::move(id4)}};
}

}  // namespace crystal
