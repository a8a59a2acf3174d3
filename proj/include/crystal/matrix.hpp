#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crystal/base_ring.hpp"

namespace crystal {

using RowVector = std::vector<RingValue>;

/// Dense matrix over a BaseRing. Vectors are rows and matrices act on the
/// right: v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const RingValue& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(const BaseRing& ring, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, ring.zero());
  }

  static Matrix identity(const BaseRing& ring, std::size_t n) {
    Matrix m = zero(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_rows(const std::vector<RowVector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size(), rows.front().empty() ? RingValue{} : rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("matrix rows have different lengths");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  RingValue& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const RingValue& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  RowVector row(std::size_t i) const {
    return RowVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<RowVector> to_rows() const {
    std::vector<RowVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingValue> data_;
};

namespace linalg {

inline void require_shape(const Matrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() != rows || m.cols() != cols) throw InputError("matrix shape mismatch");
}

inline Matrix multiply(const BaseRing& R, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
  Matrix out = Matrix::zero(R, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (R.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = R.add(out(i, j), R.mul(a(i, k), b(k, j)));
    }
  return out;
}

inline Matrix add(const BaseRing& R, const Matrix& a, const Matrix& b) {
  require_shape(b, a.rows(), a.cols());
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = R.add(a(i, j), b(i, j));
  return out;
}

inline Matrix scale(const BaseRing& R, const RingValue& r, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = R.mul(r, a(i, j));
  return out;
}

inline Matrix apply_entrywise(const BaseRing& R, Automorphism s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = R.apply(s, a(i, j));
  return out;
}

inline RowVector apply_entrywise(const BaseRing& R, Automorphism s, const RowVector& v) {
  RowVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(R.apply(s, x));
  return out;
}

inline RowVector row_times(const BaseRing& R, const RowVector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw InputError("vector length does not match matrix");
  RowVector out(m.cols(), R.zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (R.is_zero(v[k])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = R.add(out[j], R.mul(v[k], m(k, j)));
  }
  return out;
}

inline RowVector add(const BaseRing& R, const RowVector& a, const RowVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  RowVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
  return out;
}

inline RowVector scale(const BaseRing& R, const RowVector& v, const RingValue& r) {
  RowVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(R.mul(x, r));
  return out;
}

inline bool is_zero(const BaseRing& R, const RowVector& v) {
  for (const auto& x : v)
    if (!R.is_zero(x)) return false;
  return true;
}

inline RowVector unit_vector(const BaseRing& R, std::size_t n, std::size_t i) {
  RowVector v(n, R.zero());
  v.at(i) = R.one();
  return v;
}

/// Cofactor expansion; valid over any commutative ring. Meant for the small
/// ranks used by module checks.
inline RingValue determinant(const BaseRing& R, const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R.one();
  if (n == 1) return m(0, 0);
  RingValue det = R.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (R.is_zero(m(0, c))) continue;
    Matrix minor = Matrix::zero(R, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    RingValue term = R.mul(m(0, c), determinant(R, minor));
    det = c % 2 == 0 ? R.add(det, term) : R.sub(det, term);
  }
  return det;
}

/// Inverse via the adjugate; nullopt iff the determinant is not a unit.
inline std::optional<Matrix> inverse(const BaseRing& R, const Matrix& m) {
  auto det_inv = R.try_invert(determinant(R, m));
  if (!det_inv) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix out = Matrix::zero(R, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Matrix minor = Matrix::zero(R, n - 1, n - 1);
      for (std::size_t i = 0, a = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, b = 0; j < n; ++j)
          if (j != c) minor(a, b++) = m(i, j);
        ++a;
      }
      RingValue cof = determinant(R, minor);
      if ((r + c) % 2 == 1) cof = R.neg(cof);
      out(c, r) = R.mul(cof, *det_inv);
    }
  }
  return out;
}

/// Reduced row echelon basis of the row span. Requires a field.
struct Echelon {
  std::vector<RowVector> rows;
  std::vector<std::size_t> pivots;
};

inline Echelon row_echelon(const BaseRing& R, std::vector<RowVector> rows, std::size_t width) {
  if (!R.is_field()) throw DomainError("row reduction needs a field, got " + R.name());
  Echelon e;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t p = next;
    while (p < rows.size() && R.is_zero(rows[p][col])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    rows[next] = scale(R, rows[next], *R.try_invert(rows[next][col]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || R.is_zero(rows[i][col])) continue;
      rows[i] = add(R, rows[i], scale(R, rows[next], R.neg(rows[i][col])));
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

/// Whether v is an R-combination of the basis rows. Fields use elimination;
/// other finite rings are searched over all coefficient tuples up to `cap`.
inline bool in_span(const BaseRing& R, const std::vector<RowVector>& basis, const RowVector& v,
                    std::uint64_t cap = 1'000'000) {
  if (is_zero(R, v)) return true;
  if (basis.empty()) return false;
  if (R.is_field()) {
    auto with = basis;
    with.push_back(v);
    return row_echelon(R, with, v.size()).rows.size() == row_echelon(R, basis, v.size()).rows.size();
  }
  const auto elems = R.enumerate();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > cap / elems.size()) throw DomainError("span search exceeds the size cap");
    total *= elems.size();
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    RowVector acc(v.size(), R.zero());
    std::uint64_t k = idx;
    for (const auto& b : basis) {
      acc = add(R, acc, scale(R, b, elems[k % elems.size()]));
      k /= elems.size();
    }
    if (acc == v) return true;
  }
  return false;
}

inline bool is_idempotent(const BaseRing& R, const Matrix& p) { return multiply(R, p, p) == p; }

/// Every row of `a` is fixed by the idempotent `b`, i.e. rowspace(a) lies in image(b).
inline bool rows_fixed_by(const BaseRing& R, const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (row_times(R, a.row(i), b) != a.row(i)) return false;
  return true;
}

/// Some R-linear idempotent P with image exactly span(basis), or nullopt when
/// the span is not an R-direct summand of R^width.
inline std::optional<Matrix> find_projection(const BaseRing& R, const std::vector<RowVector>& basis,
                                             std::size_t width, std::uint64_t cap = 1'000'000) {
  if (basis.empty()) return Matrix::zero(R, width, width);
  if (R.is_field()) {
    auto e = row_echelon(R, basis, width);
    std::vector<RowVector> full = e.rows;
    std::vector<bool> pivot(width, false);
    for (auto p : e.pivots) pivot[p] = true;
    for (std::size_t j = 0; j < width; ++j)
      if (!pivot[j]) full.push_back(unit_vector(R, width, j));
    Matrix b = Matrix::from_rows(full);
    Matrix d = Matrix::zero(R, width, width);
    for (std::size_t i = 0; i < e.rows.size(); ++i) d(i, i) = R.one();
    return multiply(R, multiply(R, *inverse(R, b), d), b);
  }

  // P = C * B with C ranging over all width x k coefficient matrices.
  const auto elems = R.enumerate();
  const std::size_t k = basis.size();
  Matrix b = Matrix::from_rows(basis);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < width * k; ++i) {
    if (total > cap / elems.size()) throw DomainError("projection search exceeds the size cap");
    total *= elems.size();
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix c = Matrix::zero(R, width, k);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < width; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        c(i, j) = elems[rest % elems.size()];
        rest /= elems.size();
      }
    Matrix p = multiply(R, c, b);
    if (rows_fixed_by(R, b, p) && is_idempotent(R, p)) return p;
  }
  return std::nullopt;
}

}  // namespace linalg
}  // namespace crystal
