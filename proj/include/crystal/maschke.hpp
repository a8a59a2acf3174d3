#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/graded.hpp"
#include "crystal/matrix.hpp"

namespace crystal {

inline constexpr std::size_t max_module_group_order = 8;
inline constexpr std::size_t max_module_rank = 6;

/// Right A-module that is free of finite rank over R, given by one action
/// matrix per group element. With row vectors of right coefficients, u_g acts
/// by phi_g(v) = sigma_g^-1(v) * U_g and r in R by entrywise scaling.
///
/// The datum must be crystalline, centrally consistent (sigma is a
/// homomorphism) and have every alpha value a unit, so each u_g is a unit of A.
class SemilinearModule {
 public:
  SemilinearModule(AlgebraPtr alg, std::size_t rank, std::vector<Matrix> actions)
      : alg_(std::move(alg)), rank_(rank), actions_(std::move(actions)) {
    const auto& R = alg_->ring();
    const std::size_t n = alg_->group().order();
    if (n > max_module_group_order) throw DomainError("module checks are limited to |G| <= 8");
    if (rank_ > max_module_rank) throw DomainError("module checks are limited to rank <= 6");
    if (!alg_->crystalline()) throw DomainError("module needs a crystalline datum");
    if (!alg_->report().centrally_consistent) throw DomainError("module needs sigma_{gh} = sigma_g sigma_h");
    for (const auto& a : alg_->datum().alphas())
      if (!R.try_invert(a)) throw DomainError("module needs every alpha value to be a unit");
    if (actions_.size() != n) throw InputError("need one action matrix per group element");
    for (const auto& m : actions_) {
      linalg::require_shape(m, rank_, rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) R.require(m(i, j));
    }
  }

  /// A as a right module over itself in the basis u_0, ..., u_{n-1}. Row i of
  /// U_g holds the right coefficient of u_i u_g = u_{ig} sigma_{ig}^-1(alpha(i, g)).
  static SemilinearModule regular(AlgebraPtr alg) {
    const auto& d = alg->datum();
    const auto& R = d.ring();
    const std::size_t n = d.order();
    std::vector<Matrix> actions;
    for (std::size_t g = 0; g < n; ++g) {
      Matrix u = Matrix::zero(R, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t ig = d.group().mul(i, g);
        u(i, ig) = d.apply_sigma_inverse(ig, d.alpha(i, g));
      }
      actions.push_back(std::move(u));
    }
    return SemilinearModule(std::move(alg), n, std::move(actions));
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const BaseRing& ring() const noexcept { return alg_->ring(); }
  std::size_t rank() const noexcept { return rank_; }
  const Matrix& action(std::size_t g) const { return actions_.at(g); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }

  /// v u_g
  RowVector act(std::size_t g, const RowVector& v) const {
    const auto& d = alg_->datum();
    return linalg::row_times(ring(), linalg::apply_entrywise(ring(), inverse(d.sigma(g)), v), actions_.at(g));
  }

  /// v u_g^-1, using u_g^-1 = alpha(g^-1, g)^-1 u_{g^-1}.
  RowVector act_inverse(std::size_t g, const RowVector& v) const {
    const auto& d = alg_->datum();
    const std::size_t gi = d.group().inverse(g);
    return act(gi, linalg::scale(ring(), v, *ring().try_invert(d.alpha(gi, g))));
  }

  /// v a for a = sum_h t_h u_h in A: sum_h (v t_h) u_h.
  RowVector act(const GradedElement& a, const RowVector& v) const {
    RowVector out(rank_, ring().zero());
    for (const auto& [h, t] : a.terms()) out = linalg::add(ring(), out, act(h, linalg::scale(ring(), v, t)));
    return out;
  }

  /// v T for an R-linear endomorphism given as a matrix.
  RowVector apply(const Matrix& t, const RowVector& v) const { return linalg::row_times(ring(), v, t); }

 private:
  AlgebraPtr alg_;
  std::size_t rank_;
  std::vector<Matrix> actions_;
};

struct ModuleReport {
  std::vector<CheckResult> checks;  // identity_action, compatibility, invertible

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

/// Checks U_e = I, sigma_h^-1(U_g) U_h = sigma_{gh}^-1(alpha(g, h)) U_{gh}
/// for all pairs, and invertibility of each U_g.
inline ModuleReport validate_module(const SemilinearModule& m) {
  const auto& d = m.algebra()->datum();
  const auto& R = d.ring();
  const std::size_t n = d.order();

  CheckResult identity{"identity_action"};
  identity.record(m.action(Group::identity) == Matrix::identity(R, m.rank()), Witness{{Group::identity}, {}});

  CheckResult compat{"compatibility"};
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = d.group().mul(g, h);
      Matrix lhs = linalg::multiply(R, linalg::apply_entrywise(R, inverse(d.sigma(h)), m.action(g)), m.action(h));
      Matrix rhs = linalg::scale(R, d.apply_sigma_inverse(gh, d.alpha(g, h)), m.action(gh));
      compat.record(lhs == rhs, Witness{{g, h}, {}});
    }
  }

  CheckResult invertible{"invertible"};
  for (std::size_t g = 0; g < n; ++g)
    invertible.record(R.try_invert(linalg::determinant(R, m.action(g))).has_value(),
                      Witness{{g}, linalg::determinant(R, m.action(g))});

  return ModuleReport{{std::move(identity), std::move(compat), std::move(invertible)}};
}

namespace detail {

inline RingValue inverse_group_order(const SemilinearModule& m) {
  const auto& R = m.ring();
  const std::size_t n = m.algebra()->group().order();
  auto inv = R.try_invert(R.from_int(static_cast<std::int64_t>(n)));
  if (!inv) throw DomainError("|G| = " + std::to_string(n) + " not invertible in " + R.name());
  return *inv;
}

}  // namespace detail

/// Averages an R-linear projection P onto an A-submodule N into
/// lambda(v) = |G|^-1 sum_g ((v u_g) P) u_g^-1, returned as the matrix whose
/// row i is lambda(e_i). The result is an A-linear projection onto N.
inline Matrix averaging_projection(const SemilinearModule& m, const Matrix& p) {
  const auto& R = m.ring();
  const std::size_t n = m.algebra()->group().order();
  const RingValue scale = detail::inverse_group_order(m);
  linalg::require_shape(p, m.rank(), m.rank());
  if (!linalg::is_idempotent(R, p)) throw DomainError("projection is not idempotent");
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t g = 0; g < n; ++g) {
      RowVector moved = m.act(g, p.row(i));
      if (m.apply(p, moved) != moved) throw DomainError("image of the projection is not A-stable");
    }
  }

  Matrix lambda = Matrix::zero(R, m.rank(), m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    RowVector acc(m.rank(), R.zero());
    const RowVector e = linalg::unit_vector(R, m.rank(), i);
    for (std::size_t g = 0; g < n; ++g) acc = linalg::add(R, acc, m.act_inverse(g, m.apply(p, m.act(g, e))));
    acc = linalg::scale(R, acc, scale);
    for (std::size_t j = 0; j < m.rank(); ++j) lambda(i, j) = acc[j];
  }
  return lambda;
}

struct LinearityResult {
  bool linear = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (g, basis index i)
};

/// Whether T commutes with every u_g: (e_i u_g) T = (e_i T) u_g on the
/// standard basis, which spans M over R.
inline LinearityResult check_a_linear(const SemilinearModule& m, const Matrix& t) {
  const auto& R = m.ring();
  linalg::require_shape(t, m.rank(), m.rank());
  for (std::size_t g = 0; g < m.algebra()->group().order(); ++g) {
    for (std::size_t i = 0; i < m.rank(); ++i) {
      const RowVector e = linalg::unit_vector(R, m.rank(), i);
      if (m.apply(t, m.act(g, e)) != m.act(g, m.apply(t, e))) return LinearityResult{false, std::make_pair(g, i)};
    }
  }
  return {};
}

/// A-linear idempotent with image span(basis): finds an R-projection onto N
/// and averages it. Needs |G| invertible, N A-stable and an R-direct summand.
inline Matrix split_submodule(const SemilinearModule& m, const std::vector<RowVector>& basis) {
  const auto& R = m.ring();
  detail::inverse_group_order(m);
  if (!R.is_finite() && !R.is_field()) throw DomainError("submodule splitting needs a finite ring or a field");
  for (const auto& b : basis) {
    if (b.size() != m.rank()) throw InputError("submodule vector has the wrong length");
    for (const auto& x : b) R.require(x);
  }
  for (const auto& b : basis)
    for (std::size_t g = 0; g < m.algebra()->group().order(); ++g)
      if (!linalg::in_span(R, basis, m.act(g, b))) throw DomainError("N is not A-stable");

  auto p = linalg::find_projection(R, basis, m.rank());
  if (!p) throw DomainError("N is not an R-direct summand");
  return averaging_projection(m, *p);
}

}  // namespace crystal
