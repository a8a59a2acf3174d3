#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/errors.hpp"

namespace crystal {

/// Validation is exhaustive (cubic in the order), so larger tables are refused.
inline constexpr std::size_t max_group_order = 64;

/// Finite group stored as a validated Cayley table with the identity at index 0.
class Group {
 public:
  static constexpr std::size_t identity = 0;

  static Group cyclic(std::size_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    check_order(n);
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    return Group(n, std::move(table));
  }

  /// Direct product; element (i, j) sits at index i * |H| + j, so (0, 0) stays the identity.
  static Group product(const Group& g, const Group& h) {
    const std::size_t n = g.order() * h.order();
    check_order(n);
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t gi = g.mul(a / h.order(), b / h.order());
        std::size_t hi = h.mul(a % h.order(), b % h.order());
        table[a * n + b] = gi * h.order() + hi;
      }
    }
    return Group(n, std::move(table));
  }

  /// Builds a group from an explicit table. If the identity is not at index 0
  /// the labels of 0 and the identity are swapped.
  static Group from_table(const std::vector<std::vector<std::size_t>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("group table is empty");
    check_order(n);
    for (const auto& row : rows) {
      if (row.size() != n) throw InputError("group table is not square");
      for (std::size_t v : row)
        if (v >= n) throw InputError("group table entry out of range");
    }

    std::optional<std::size_t> e;
    for (std::size_t c = 0; c < n && !e; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = rows[c][j] == j && rows[j][c] == j;
      if (ok) e = c;
    }
    if (!e) throw InputError("group table has no identity element");

    std::vector<std::size_t> relabel(n);
    for (std::size_t i = 0; i < n; ++i) relabel[i] = i;
    std::swap(relabel[0], relabel[*e]);

    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[relabel[i] * n + relabel[j]] = relabel[rows[i][j]];
    return Group(n, std::move(table));
  }

  std::size_t order() const noexcept { return order_; }

  std::size_t mul(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return table_[i * order_ + j];
  }

  std::size_t inverse(std::size_t i) const {
    check_index(i);
    return inverses_[i];
  }

  /// Row-major table; entry i * order() + j is the product of i and j.
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  std::vector<std::vector<std::size_t>> rows() const {
    std::vector<std::vector<std::size_t>> out(order_, std::vector<std::size_t>(order_));
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out[i][j] = table_[i * order_ + j];
    return out;
  }

  std::size_t element_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t x = i; x != identity; x = mul(x, i)) ++k;
    return k;
  }

  /// For a cyclic group, exponents[i] = k with i = g^k for some generator g.
  std::optional<std::vector<std::size_t>> cyclic_exponents() const {
    for (std::size_t g = 0; g < order_; ++g) {
      if (element_order(g) != order_) continue;
      std::vector<std::size_t> exponents(order_);
      std::size_t x = identity;
      for (std::size_t k = 0; k < order_; ++k) {
        exponents[x] = k;
        x = mul(x, g);
      }
      return exponents;
    }
    return std::nullopt;
  }

  bool operator==(const Group& other) const noexcept { return table_ == other.table_; }

 private:
  Group(std::size_t n, std::vector<std::size_t> table) : order_(n), table_(std::move(table)) { validate(); }

  static void check_order(std::size_t n) {
    if (n > max_group_order)
      throw InputError("group order " + std::to_string(n) + " exceeds the exhaustive-validation cap of " +
                       std::to_string(max_group_order));
  }

  void check_index(std::size_t i) const {
    if (i >= order_) throw InputError("group index " + std::to_string(i) + " out of range");
  }

  std::size_t at(std::size_t i, std::size_t j) const noexcept { return table_[i * order_ + j]; }

  void validate() {
    const std::size_t n = order_;
    for (std::size_t j = 0; j < n; ++j)
      if (at(0, j) != j || at(j, 0) != j) throw InputError("index 0 is not the identity");

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (row_seen[at(i, j)] || col_seen[at(j, i)]) throw InputError("group table is not a Latin square");
        row_seen[at(i, j)] = true;
        col_seen[at(j, i)] = true;
      }
    }

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InputError("group table is not associative: (" + std::to_string(a) + ", " + std::to_string(b) +
                             ", " + std::to_string(c) + ")");

    inverses_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (at(i, j) == identity && at(j, i) == identity) inverses_[i] = j;
    for (std::size_t i = 0; i < n; ++i)
      if (inverses_[i] == n) throw InputError("element " + std::to_string(i) + " has no inverse");
  }

  std::size_t order_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
};

}  // namespace crystal
