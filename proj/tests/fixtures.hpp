#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "crystal/graded.hpp"
#include "crystal/fuzz.hpp"
#include "crystal/io.hpp"
#include "crystal/maschke.hpp"

namespace crystal {

// Readable gtest failure output for ring values.
inline void PrintTo(const RingValue& v, std::ostream* os) {
  std::visit(
      [os](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
          *os << x;
        else if constexpr (std::is_same_v<T, Residue>)
          *os << x.value;
        else if constexpr (std::is_same_v<T, QuadraticValue>)
          *os << "(" << x.a << ", " << x.b << ")";
        else
          *os << "(" << x.x << ", " << x.y << ")";
      },
      v);
}

inline void PrintTo(const GradedElement& x, std::ostream* os) { *os << io::element_to_json(x).dump(); }

}  // namespace crystal

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(CRYSTAL_DATA_DIR) + "/" + name; }

inline crystal::CrystalDatum datum(const std::string& name) { return crystal::io::load_datum(data_path(name)); }

inline crystal::AlgebraPtr algebra(const std::string& name) { return crystal::Algebra::make(datum(name)); }

/// Random ring element; integer-like components are drawn from [-bound, bound].
inline crystal::RingValue random_value(const crystal::BaseRing& R, std::mt19937_64& rng, std::int64_t bound = 9) {
  using namespace crystal;
  std::uniform_int_distribution<std::int64_t> small(-bound, bound);
  std::uniform_int_distribution<std::int64_t> positive(1, bound);
  switch (R.kind()) {
    case RingKind::integer: return Integer(small(rng));
    case RingKind::rational: return rational_value(small(rng), positive(rng));
    case RingKind::quadratic:
      if (R.quadratic_base() == RingKind::integer) return quadratic_value(small(rng), small(rng));
      return QuadraticValue{Rational(small(rng), positive(rng)), Rational(small(rng), positive(rng))};
    default: {
      auto elems = R.enumerate();
      return elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
    }
  }
}

inline crystal::GradedElement random_element(const crystal::AlgebraPtr& alg, std::mt19937_64& rng,
                                             std::int64_t bound = 9) {
  crystal::GradedElement x(alg);
  for (std::size_t g = 0; g < alg->group().order(); ++g) x.accumulate(g, random_value(alg->ring(), rng, bound));
  return x;
}

struct Corruption {
  std::size_t g = 0;
  std::size_t h = 0;
  std::int64_t value = 0;
  crystal::CrystalDatum datum;
};

/// Replace one alpha entry of an integer datum by a different value in [-4, 4].
inline Corruption corrupt_alpha(const crystal::CrystalDatum& d, std::mt19937_64& rng) {
  using namespace crystal;
  const std::size_t n = d.order();
  const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, n * n - 1)(rng);
  const std::size_t g = pos / n, h = pos % n;
  const Integer current = std::get<Integer>(d.alpha(g, h));
  std::int64_t v = 0;
  do {
    v = std::uniform_int_distribution<std::int64_t>(-4, 4)(rng);
  } while (Integer(v) == current);
  return {g, h, v, d.with_alpha(g, h, Integer(v))};
}

/// Alpha table of an integer datum as machine integers, for the oracles.
inline std::vector<std::vector<std::int64_t>> integer_alpha(const crystal::CrystalDatum& d) {
  std::vector<std::vector<std::int64_t>> out(d.order(), std::vector<std::int64_t>(d.order()));
  for (std::size_t g = 0; g < d.order(); ++g)
    for (std::size_t h = 0; h < d.order(); ++h)
      out[g][h] = static_cast<std::int64_t>(std::get<crystal::Integer>(d.alpha(g, h)));
  return out;
}

inline crystal::Matrix random_matrix(const crystal::BaseRing& R, std::mt19937_64& rng, std::size_t n) {
  crystal::Matrix m = crystal::Matrix::zero(R, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_value(R, rng);
  return m;
}

inline crystal::Matrix random_invertible(const crystal::BaseRing& R, std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto m = random_matrix(R, rng, n);
    if (crystal::linalg::inverse(R, m)) return m;
  }
}

/// A random module over a twisted group algebra F_p^c[C_n] with |G| invertible:
/// a direct sum of regular and (when c = 1) trivial blocks of total rank <= 4,
/// conjugated by a random invertible matrix.
struct RandomModule {
  crystal::SemilinearModule module;
  std::string description;
};

inline RandomModule random_module(std::mt19937_64& rng) {
  using namespace crystal;
  const std::int64_t p = rng() % 2 == 0 ? 3 : 5;
  const auto R = BaseRing::modular(p);
  const std::vector<std::size_t> orders = p == 3 ? std::vector<std::size_t>{2, 4} : std::vector<std::size_t>{2, 3, 4};
  const std::size_t n = orders[rng() % orders.size()];
  const RingValue c = R.from_int(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1)));
  auto alg = Algebra::make(cyclic_family_datum(R, Group::cyclic(n), Automorphism::identity, c));
  const auto regular = SemilinearModule::regular(alg);

  std::vector<std::vector<Matrix>> blocks{regular.actions()};
  std::size_t rank = n;
  const bool untwisted = R.is_one(c);
  while (untwisted && rank < 4 && rng() % 2 == 0) {
    blocks.push_back(std::vector<Matrix>(n, Matrix::identity(R, 1)));
    ++rank;
  }
  if (rank + n <= 4 && rng() % 2 == 0) {
    blocks.push_back(regular.actions());
    rank += n;
  }

  std::vector<Matrix> actions;
  const Matrix q = random_invertible(R, rng, rank);
  const Matrix q_inv = *linalg::inverse(R, q);
  for (std::size_t g = 0; g < n; ++g) {
    Matrix u = Matrix::zero(R, rank, rank);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b[g].rows(); ++i)
        for (std::size_t j = 0; j < b[g].cols(); ++j) u(offset + i, offset + j) = b[g](i, j);
      offset += b[g].rows();
    }
    actions.push_back(linalg::multiply(R, linalg::multiply(R, q, u), q_inv));
  }
  std::string desc = "F_" + std::to_string(p) + " C_" + std::to_string(n) + " c=" + R.format(c) +
                     " rank " + std::to_string(rank);
  return {SemilinearModule(alg, rank, std::move(actions)), desc};
}

/// Echelon basis of the A-submodule generated by v: the span of v u_g over all g.
inline std::vector<crystal::RowVector> generated_submodule(const crystal::SemilinearModule& m,
                                                           const crystal::RowVector& v) {
  std::vector<crystal::RowVector> gens;
  for (std::size_t g = 0; g < m.algebra()->group().order(); ++g) gens.push_back(m.act(g, v));
  return crystal::linalg::row_echelon(m.ring(), gens, m.rank()).rows;
}

/// R-linear projection onto span(basis) along a random complement. Needs a field.
inline crystal::Matrix random_projection(const crystal::BaseRing& R, const std::vector<crystal::RowVector>& basis,
                                         std::size_t width, std::mt19937_64& rng) {
  using namespace crystal;
  std::vector<RowVector> full = basis;
  while (full.size() < width) {
    RowVector v(width);
    for (auto& x : v) x = random_value(R, rng);
    auto with = full;
    with.push_back(v);
    if (linalg::row_echelon(R, with, width).rows.size() == with.size()) full = std::move(with);
  }
  if (basis.empty()) return Matrix::zero(R, width, width);
  Matrix b = Matrix::from_rows(full);
  Matrix d = Matrix::zero(R, width, width);
  for (std::size_t i = 0; i < basis.size(); ++i) d(i, i) = R.one();
  return linalg::multiply(R, linalg::multiply(R, *linalg::inverse(R, b), d), b);
}

/// Properties of an averaged projection: (a) idempotent, (b) identity on N,
/// (c) A-linear, (d) image equal to N. Returns the first failing letter, or 0.
inline char averaging_defect(const crystal::SemilinearModule& m, const std::vector<crystal::RowVector>& basis,
                             const crystal::Matrix& lambda) {
  using namespace crystal;
  const auto& R = m.ring();
  if (!linalg::is_idempotent(R, lambda)) return 'a';
  for (const auto& b : basis)
    if (m.apply(lambda, b) != b) return 'b';
  if (!check_a_linear(m, lambda).linear) return 'c';
  for (const auto& row : lambda.to_rows())
    if (!linalg::in_span(R, basis, row)) return 'd';
  return 0;
}

inline std::vector<crystal::BaseRing> sample_rings() {
  using crystal::BaseRing;
  using crystal::RingKind;
  return {BaseRing::integers(),        BaseRing::rationals(),         BaseRing::modular(4),
          BaseRing::modular(6),        BaseRing::modular(7),          BaseRing::quadratic(-1),
          BaseRing::quadratic(2),      BaseRing::quadratic(-5, RingKind::rational), BaseRing::pair_product(2),
          BaseRing::pair_product(3)};
}

}  // namespace fixtures
