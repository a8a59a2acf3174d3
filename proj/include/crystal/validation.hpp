#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal/datum.hpp"

namespace crystal {

/// Concrete counterexample: group indices (pair or triple) and, where the
/// violated identity quantifies over R, the offending ring element.
struct Witness {
  std::vector<std::size_t> elements;
  std::optional<RingValue> value;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  std::optional<Witness> witness;  // first failure in evaluation order

  void record(bool ok, Witness w) {
    ++evaluated;
    if (ok) return;
    passed = false;
    ++failures;
    if (!witness) witness = std::move(w);
  }
};

namespace check_names {
inline constexpr const char* sigma_identity = "sigma_identity";
inline constexpr const char* cocycle = "cocycle";
inline constexpr const char* twisted_commutation = "twisted_commutation";
inline constexpr const char* normalization = "normalization";
inline constexpr const char* inverse_symmetry = "inverse_symmetry";
inline constexpr const char* central = "central";
inline constexpr const char* alpha_regular = "alpha_regular";
}  // namespace check_names

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool pre_crystalline_consistent = false;
  bool centrally_consistent = false;
  bool crystalline = false;

  const CheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw InputError("no check named " + name);
  }
};

namespace detail {

/// Elements on which identities quantified over R are evaluated: all of R
/// when finite, otherwise the ring generators plus the datum's samples.
inline std::vector<RingValue> quantifier_domain(const CrystalDatum& d) {
  if (d.ring().is_finite()) return d.ring().enumerate();
  std::vector<RingValue> out = d.ring().generators();
  for (const auto& s : d.samples())
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

inline bool cocycle_holds(const CrystalDatum& d, std::size_t g, std::size_t h, std::size_t t) {
  const auto& R = d.ring();
  const auto& G = d.group();
  RingValue lhs = R.mul(d.alpha(g, h), d.alpha(G.mul(g, h), t));
  RingValue rhs = R.mul(d.apply_sigma(g, d.alpha(h, t)), d.alpha(g, G.mul(h, t)));
  return lhs == rhs;
}

inline bool twisted_commutation_holds(const CrystalDatum& d, std::size_t g, std::size_t h, const RingValue& r) {
  const auto& R = d.ring();
  const RingValue& a = d.alpha(g, h);
  RingValue lhs = R.mul(d.apply_sigma(g, d.apply_sigma(h, r)), a);
  RingValue rhs = R.mul(a, d.apply_sigma(d.group().mul(g, h), r));
  return lhs == rhs;
}

inline bool composition_holds(const CrystalDatum& d, std::size_t g, std::size_t h, const RingValue& r) {
  return d.apply_sigma(g, d.apply_sigma(h, r)) == d.apply_sigma(d.group().mul(g, h), r);
}

}  // namespace detail

/// Evaluates every consequence of the pre-crystalline axioms on the datum.
/// Mathematical failures become report entries with witnesses; only shape
/// problems (caught at datum construction) raise.
inline ValidationReport validate_datum(const CrystalDatum& d) {
  namespace cn = check_names;
  const auto& R = d.ring();
  const auto& G = d.group();
  const std::size_t n = G.order();
  const auto domain = detail::quantifier_domain(d);
  const auto gens = R.generators();

  CheckResult sigma_e{cn::sigma_identity};
  sigma_e.record(d.sigma(Group::identity) == Automorphism::identity, Witness{{Group::identity}, std::nullopt});

  CheckResult cocycle{cn::cocycle};
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t t = 0; t < n; ++t) cocycle.record(detail::cocycle_holds(d, g, h, t), Witness{{g, h, t}, {}});

  CheckResult twisted{cn::twisted_commutation};
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (const auto& r : domain) {
        bool ok = detail::twisted_commutation_holds(d, g, h, r);
        twisted.record(ok, Witness{{g, h}, r});
      }

  CheckResult normalization{cn::normalization};
  for (std::size_t g = 0; g < n; ++g) {
    normalization.record(R.is_one(d.alpha(g, Group::identity)), Witness{{g, Group::identity}, {}});
    normalization.record(R.is_one(d.alpha(Group::identity, g)), Witness{{Group::identity, g}, {}});
  }

  CheckResult inverse_sym{cn::inverse_symmetry};
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t gi = G.inverse(g);
    inverse_sym.record(d.alpha(g, gi) == d.apply_sigma(g, d.alpha(gi, g)), Witness{{g}, {}});
  }

  CheckResult central{cn::central};
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (const auto& r : gens) central.record(detail::composition_holds(d, g, h, r), Witness{{g, h}, r});

  CheckResult regular{cn::alpha_regular};
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) regular.record(R.is_regular(d.alpha(g, h)), Witness{{g, h}, d.alpha(g, h)});

  ValidationReport report;
  report.pre_crystalline_consistent =
      sigma_e.passed && cocycle.passed && twisted.passed && normalization.passed && inverse_sym.passed;
  report.centrally_consistent = central.passed;
  report.crystalline = report.pre_crystalline_consistent && regular.passed;
  report.checks = {std::move(sigma_e),       std::move(cocycle), std::move(twisted), std::move(normalization),
                   std::move(inverse_sym), std::move(central), std::move(regular)};
  return report;
}

/// True iff the witness stored in a failed check is a genuine violation of
/// that check's identity when re-evaluated from scratch.
inline bool witness_reverifies(const CrystalDatum& d, const CheckResult& c) {
  namespace cn = check_names;
  if (!c.witness) return false;
  const auto& w = *c.witness;
  const auto& e = w.elements;
  const auto& R = d.ring();
  auto in_range = [&](std::size_t count) {
    return e.size() == count && std::all_of(e.begin(), e.end(), [&](std::size_t i) { return i < d.order(); });
  };
  if (c.name == cn::sigma_identity) return in_range(1) && d.sigma(e[0]) != Automorphism::identity;
  if (c.name == cn::cocycle) return in_range(3) && !detail::cocycle_holds(d, e[0], e[1], e[2]);
  if (c.name == cn::twisted_commutation)
    return in_range(2) && w.value && R.contains(*w.value) && !detail::twisted_commutation_holds(d, e[0], e[1], *w.value);
  if (c.name == cn::normalization)
    return in_range(2) && (e[0] == Group::identity || e[1] == Group::identity) && !R.is_one(d.alpha(e[0], e[1]));
  if (c.name == cn::inverse_symmetry) {
    if (!in_range(1)) return false;
    std::size_t gi = d.group().inverse(e[0]);
    return d.alpha(e[0], gi) != d.apply_sigma(e[0], d.alpha(gi, e[0]));
  }
  if (c.name == cn::central)
    return in_range(2) && w.value && R.contains(*w.value) && !detail::composition_holds(d, e[0], e[1], *w.value);
  if (c.name == cn::alpha_regular) return in_range(2) && !R.is_regular(d.alpha(e[0], e[1]));
  return false;
}

struct ConditionResult {
  bool passed = true;
  std::optional<Witness> witness;
};

/// Torsion-freeness conditions, each evaluated on its own:
///   condition3: alpha(g, g^-1) r = 0 implies r = 0
///   condition4: alpha(g, h) r = 0 implies r = 0
///   condition5: sigma_g(r) = 0 implies r = 0 (u_g r = 0 implies r = 0)
///   condition6: every sigma_g is bijective
/// `agreement` records whether the four verdicts coincide; disagreement is
/// reported, not treated as an error.
struct TorsionProfile {
  ConditionResult condition3;
  ConditionResult condition4;
  ConditionResult condition5;
  ConditionResult condition6;
  bool agreement = true;
};

namespace detail {

// Nonzero r with a*r = 0, if any.
inline std::optional<RingValue> annihilating_element(const BaseRing& R, const RingValue& a) {
  if (R.is_finite()) {
    for (const auto& r : R.enumerate())
      if (!R.is_zero(r) && R.is_zero(R.mul(a, r))) return r;
    return std::nullopt;
  }
  if (R.is_zero(a)) return R.one();
  return std::nullopt;
}

}  // namespace detail

inline TorsionProfile torsion_profile(const CrystalDatum& d) {
  const auto& R = d.ring();
  const auto& G = d.group();
  const std::size_t n = G.order();
  if (!R.is_finite() && !R.is_domain())
    throw DomainError("torsion conditions are undecidable over " + R.name());
  if (!validate_datum(d).pre_crystalline_consistent)
    throw DomainError("torsion profile requires a datum passing the pre-crystalline checks");

  TorsionProfile p;

  for (std::size_t g = 0; g < n && p.condition3.passed; ++g) {
    if (auto r = detail::annihilating_element(R, d.alpha(g, G.inverse(g)))) {
      p.condition3.passed = false;
      p.condition3.witness = Witness{{g, G.inverse(g)}, *r};
    }
  }

  for (std::size_t g = 0; g < n && p.condition4.passed; ++g) {
    for (std::size_t h = 0; h < n && p.condition4.passed; ++h) {
      if (auto r = detail::annihilating_element(R, d.alpha(g, h))) {
        p.condition4.passed = false;
        p.condition4.witness = Witness{{g, h}, *r};
      }
    }
  }

  if (R.is_finite()) {
    const auto elements = R.enumerate();
    for (std::size_t g = 0; g < n; ++g) {
      std::set<std::size_t> image;
      for (const auto& r : elements) {
        RingValue s = d.apply_sigma(g, r);
        image.insert(R.index_of(s));
        if (p.condition5.passed && !R.is_zero(r) && R.is_zero(s)) {
          p.condition5.passed = false;
          p.condition5.witness = Witness{{g}, r};
        }
      }
      if (p.condition6.passed && image.size() != elements.size()) {
        p.condition6.passed = false;
        RingValue missing = R.zero();
        for (const auto& r : elements)
          if (!image.count(R.index_of(r))) {
            missing = r;
            break;
          }
        p.condition6.witness = Witness{{g}, missing};
      }
    }
  } else {
    // Over a domain each spec has an explicit inverse; checking both
    // compositions on generators decides injectivity and surjectivity.
    auto domain = detail::quantifier_domain(d);
    for (std::size_t g = 0; g < n; ++g) {
      for (const auto& r : domain) {
        if (p.condition5.passed && !R.is_zero(r) && R.is_zero(d.apply_sigma(g, r))) {
          p.condition5.passed = false;
          p.condition5.witness = Witness{{g}, r};
        }
        if (p.condition5.passed && d.apply_sigma_inverse(g, d.apply_sigma(g, r)) != r) {
          p.condition5.passed = false;
          p.condition5.witness = Witness{{g}, r};
        }
        if (p.condition6.passed && d.apply_sigma(g, d.apply_sigma_inverse(g, r)) != r) {
          p.condition6.passed = false;
          p.condition6.witness = Witness{{g}, r};
        }
      }
    }
  }

  const bool c3 = p.condition3.passed;
  p.agreement = p.condition4.passed == c3 && p.condition5.passed == c3 && p.condition6.passed == c3;
  return p;
}

}  // namespace crystal
