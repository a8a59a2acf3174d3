#pragma once

// Reference computations used only by the tests. Nothing here goes through
// the library's ring, datum or algebra code: everything is plain machine
// integers on raw tables.

#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;

/// First (a, b, c) with (ab)c != a(bc) on a raw Cayley table.
inline std::optional<std::array<std::size_t, 3>> associativity_violation(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return std::array<std::size_t, 3>{a, b, c};
  return std::nullopt;
}

inline bool is_latin_square(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> r(n), c(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (r[t[i][j]] || c[t[j][i]]) return false;
      r[t[i][j]] = c[t[j][i]] = true;
    }
  }
  return true;
}

inline std::int64_t reduce(std::int64_t v, std::int64_t n) {
  if (n == 0) return v;
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

/// Triples violating alpha(g,h) alpha(gh,t) = alpha(h,t) alpha(g,ht) for
/// trivial sigma, with integer alpha reduced mod n (n = 0 means Z).
inline std::vector<std::array<std::size_t, 3>> untwisted_cocycle_violations(
    const Table& t, const std::vector<std::vector<std::int64_t>>& alpha, std::int64_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t k = t.size();
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h)
      for (std::size_t s = 0; s < k; ++s) {
        std::int64_t lhs = reduce(alpha[g][h] * alpha[t[g][h]][s], n);
        std::int64_t rhs = reduce(alpha[h][s] * alpha[g][t[h][s]], n);
        if (lhs != rhs) out.push_back({g, h, s});
      }
  return out;
}

/// Integer quaternions (w, x, y, z) = w + x i + y j + z k.
using Quaternion = std::array<std::int64_t, 4>;

inline Quaternion hamilton(const Quaternion& p, const Quaternion& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

/// Zero-divisor partner of a in Z/n by trying every residue.
inline std::optional<std::int64_t> zero_divisor_partner(std::int64_t a, std::int64_t n) {
  for (std::int64_t x = 1; x < n; ++x)
    if (a * x % n == 0) return x;
  return std::nullopt;
}

/// Group algebra F_p[C_q] as coefficient vectors; product is cyclic convolution.
using Poly = std::vector<std::int64_t>;

inline Poly convolve(const Poly& a, const Poly& b, std::int64_t p) {
  const std::size_t q = a.size();
  Poly out(q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) out[(i + j) % q] = (out[(i + j) % q] + a[i] * b[j]) % p;
  return out;
}

inline std::vector<Poly> all_polys(std::int64_t p, std::size_t q) {
  std::vector<Poly> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < q; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Poly x(q);
    std::size_t r = idx;
    for (std::size_t i = 0; i < q; ++i) {
      x[i] = static_cast<std::int64_t>(r % static_cast<std::size_t>(p));
      r /= static_cast<std::size_t>(p);
    }
    out.push_back(x);
  }
  return out;
}

inline bool is_zero(const Poly& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

/// Exhaustive semiprimeness of F_p[C_q]: no nonzero x with x a x = 0 for all a.
inline bool group_algebra_semiprime(std::int64_t p, std::size_t q) {
  const auto all = all_polys(p, q);
  for (const auto& x : all) {
    if (is_zero(x)) continue;
    bool sandwich_zero = true;
    for (const auto& a : all)
      if (!is_zero(convolve(convolve(x, a, p), x, p))) {
        sandwich_zero = false;
        break;
      }
    if (sandwich_zero) return false;
  }
  return true;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
  IntMatrix out(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = reduce(out[i][j] + a[i][k] * b[k][j], p);
  return out;
}

/// Averaging for trivial sigma and alpha = 1 over F_p:
/// Lambda = |G|^-1 sum_g U_g P U_g^-1, with U_g^-1 = U_{g^-1} supplied.
inline IntMatrix averaged(const std::vector<IntMatrix>& u, const std::vector<IntMatrix>& u_inv, const IntMatrix& proj,
                          std::int64_t p) {
  std::int64_t n = static_cast<std::int64_t>(u.size());
  std::int64_t n_inv = 1;
  while (reduce(n * n_inv, p) != 1) ++n_inv;
  IntMatrix acc(proj.size(), std::vector<std::int64_t>(proj.size(), 0));
  for (std::size_t g = 0; g < u.size(); ++g) {
    auto term = mat_mul(mat_mul(u[g], proj, p), u_inv[g], p);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < acc.size(); ++j) acc[i][j] = reduce(acc[i][j] + term[i][j], p);
  }
  for (auto& row : acc)
    for (auto& v : row) v = reduce(v * n_inv, p);
  return acc;
}

}  // namespace oracle
