#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "crystal/validation.hpp"

namespace crystal {

/// cyclic: G = <g> of order n, u_g^n = c, alpha(g^i, g^j) = c^floor((i+j)/n),
///         sigma_{g^i} = tau^i for an automorphism tau with tau^n = id, tau(c) = c.
/// skew:   alpha = 1 and sigma a homomorphism G -> {id, tau}.
enum class FuzzFamily { cyclic, skew };

inline constexpr std::size_t max_fuzz_group_order = 8;

struct FuzzConfig {
  BaseRing ring;
  Group group;
  std::size_t trials = 0;
  FuzzFamily family = FuzzFamily::cyclic;
};

struct FuzzTrial {
  std::uint64_t seed = 0;
  std::vector<Automorphism> sigma;
  std::optional<RingValue> constant;  // c, cyclic family only
  bool cocycle = false;
  bool twisted_commutation = false;
  bool pre_crystalline = false;
  bool crystalline = false;
  std::optional<bool> torsion_agreement;  // set when the torsion profile was computed
  bool condition6 = false;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t eq1_failures = 0;
  std::size_t eq2_failures = 0;
  std::size_t torsion_mismatches = 0;
  std::vector<FuzzTrial> records;
};

/// Cyclic-family datum. Throws if the group is not cyclic.
inline CrystalDatum cyclic_family_datum(const BaseRing& ring, const Group& group, Automorphism tau,
                                        const RingValue& c) {
  auto exponents = group.cyclic_exponents();
  if (!exponents) throw InputError("cyclic family needs a cyclic group");
  const std::size_t n = group.order();
  std::vector<Automorphism> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = (*exponents)[i] % 2 == 0 ? Automorphism::identity : tau;
  std::vector<RingValue> alpha;
  alpha.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) alpha.push_back(ring.pow(c, ((*exponents)[a] + (*exponents)[b]) / n));
  return CrystalDatum(ring, group, std::move(sigma), std::move(alpha));
}

/// All assignments G -> {id, tau} that are group homomorphisms.
inline std::vector<std::vector<Automorphism>> homomorphic_assignments(const Group& group, Automorphism tau) {
  const std::size_t n = group.order();
  std::vector<std::vector<Automorphism>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (mask & 1U) continue;  // identity must map to id
    auto bit = [mask](std::size_t i) { return (mask >> i) & 1U; };
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = bit(group.mul(a, b)) == (bit(a) ^ bit(b));
    if (!hom) continue;
    std::vector<Automorphism> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = bit(i) ? tau : Automorphism::identity;
    out.push_back(std::move(sigma));
  }
  return out;
}

inline CrystalDatum skew_family_datum(const BaseRing& ring, const Group& group, std::vector<Automorphism> sigma) {
  std::vector<RingValue> alpha(group.order() * group.order(), ring.one());
  return CrystalDatum(ring, group, std::move(sigma), std::move(alpha));
}

/// Generates `trials` data from the chosen family, validates each and counts
/// outcomes. Trial t uses its own generator seeded from (seed, t), so results
/// do not depend on evaluation order.
inline FuzzSummary fuzz_data(std::uint64_t seed, const FuzzConfig& config) {
  const auto& R = config.ring;
  const auto& G = config.group;
  if (!R.is_finite()) throw InputError("fuzzing needs a finite ring");
  if (G.order() > max_fuzz_group_order) throw InputError("fuzzing is limited to groups of order <= 8");

  const auto elements = R.enumerate();
  const auto autos = R.nontrivial_automorphisms();
  std::vector<std::vector<Automorphism>> skew_choices;
  if (config.family == FuzzFamily::cyclic) {
    if (!G.cyclic_exponents()) throw InputError("cyclic family needs a cyclic group");
  } else {
    if (autos.empty()) throw InputError("skew family needs a ring with a nontrivial automorphism; " + R.name() +
                                        " has none");
    skew_choices = homomorphic_assignments(G, autos.front());
  }

  FuzzSummary summary;
  summary.trials = config.trials;
  for (std::size_t t = 0; t < config.trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    FuzzTrial trial;
    trial.seed = rng();

    std::optional<CrystalDatum> d;
    if (config.family == FuzzFamily::cyclic) {
      std::vector<Automorphism> taus{Automorphism::identity};
      if (G.order() % 2 == 0) taus.insert(taus.end(), autos.begin(), autos.end());
      Automorphism tau = taus[std::uniform_int_distribution<std::size_t>(0, taus.size() - 1)(rng)];
      std::vector<RingValue> fixed;
      for (const auto& r : elements)
        if (!R.is_zero(r) && R.apply(tau, r) == r) fixed.push_back(r);
      RingValue c = fixed[std::uniform_int_distribution<std::size_t>(0, fixed.size() - 1)(rng)];
      trial.constant = c;
      d.emplace(cyclic_family_datum(R, G, tau, c));
    } else {
      auto sigma = skew_choices[std::uniform_int_distribution<std::size_t>(0, skew_choices.size() - 1)(rng)];
      d.emplace(skew_family_datum(R, G, std::move(sigma)));
    }
    trial.sigma = d->sigmas();

    auto report = validate_datum(*d);
    trial.cocycle = report.check(check_names::cocycle).passed;
    trial.twisted_commutation = report.check(check_names::twisted_commutation).passed;
    trial.pre_crystalline = report.pre_crystalline_consistent;
    trial.crystalline = report.crystalline;
    if (!trial.cocycle) ++summary.eq1_failures;
    if (!trial.twisted_commutation) ++summary.eq2_failures;
    if (trial.pre_crystalline) {
      ++summary.passed;
      auto profile = torsion_profile(*d);
      trial.torsion_agreement = profile.agreement;
      trial.condition6 = profile.condition6.passed;
      if (!profile.agreement) ++summary.torsion_mismatches;
    }
    summary.records.push_back(std::move(trial));
  }
  return summary;
}

}  // namespace crystal
