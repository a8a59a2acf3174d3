#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crystal/errors.hpp"

namespace crystal {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Residue class in Z/n, always reduced into [0, n).
struct Residue {
  std::int64_t value = 0;
  bool operator==(const Residue&) const = default;
};

/// a + b*w with w^2 = d. Both components are integral when the base is Integer.
struct QuadraticValue {
  Rational a;
  Rational b;
  bool operator==(const QuadraticValue& other) const { return a == other.a && b == other.b; }
};

/// Element (x, y) of F_p x F_p.
struct PairValue {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const PairValue&) const = default;
};

using RingValue = std::variant<Integer, Rational, Residue, QuadraticValue, PairValue>;

enum class RingKind { integer, rational, modular, quadratic, pair_product };

/// Coefficient-level automorphisms. Every spec is an involution.
enum class Automorphism { identity, quadratic_conjugation, pair_swap };

enum class ArithOp { add, mul, neg };

inline Automorphism inverse(Automorphism s) noexcept { return s; }

/// a∘b. Only defined for specs that can act on a common ring.
inline Automorphism compose(Automorphism a, Automorphism b) {
  if (a == Automorphism::identity) return b;
  if (b == Automorphism::identity) return a;
  if (a == b) return Automorphism::identity;
  throw InputError("automorphisms act on different ring kinds");
}

inline const char* to_string(Automorphism s) noexcept {
  switch (s) {
    case Automorphism::identity: return "identity";
    case Automorphism::quadratic_conjugation: return "conjugation";
    case Automorphism::pair_swap: return "swap";
  }
  return "?";
}

namespace detail {

inline bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

inline bool is_square_free(std::int64_t d) noexcept {
  std::int64_t m = d < 0 ? -d : d;
  for (std::int64_t k = 2; k * k <= m; ++k)
    if (m % (k * k) == 0) return false;
  return true;
}

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t n) noexcept {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n) noexcept {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

// Inverse of a modulo n via extended Euclid; nullopt when gcd(a, n) != 1.
inline std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) noexcept {
  std::int64_t r0 = n, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  return mod_reduce(t0, n);
}

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace detail

/// Descriptor of an exact commutative coefficient ring.
///
/// Supported kinds: Z, Q, Z/n, Z[w] or Q(w) with w^2 = d square-free, and
/// F_p x F_p. Values are RingValue variants tagged to match the ring kind;
/// every operation checks the tag and throws InputError on a mismatch.
class BaseRing {
 public:
  static BaseRing integers() { return BaseRing(RingKind::integer, 0, 0, RingKind::integer); }
  static BaseRing rationals() { return BaseRing(RingKind::rational, 0, 0, RingKind::rational); }

  static BaseRing modular(std::int64_t n) {
    if (n < 2) throw InputError("modulus must be at least 2");
    if (n > (std::int64_t{1} << 40)) throw InputError("modulus too large");
    return BaseRing(RingKind::modular, n, 0, RingKind::modular);
  }

  static BaseRing quadratic(std::int64_t d, RingKind base = RingKind::integer) {
    if (d == 0 || d == 1) throw InputError("quadratic parameter d must differ from 0 and 1");
    if (!detail::is_square_free(d)) throw InputError("quadratic parameter d must be square-free");
    if (base != RingKind::integer && base != RingKind::rational)
      throw InputError("quadratic base must be Integer or Rational");
    return BaseRing(RingKind::quadratic, 0, d, base);
  }

  static BaseRing pair_product(std::int64_t p) {
    if (!detail::is_prime(p)) throw InputError("pair product requires a prime p");
    if (p > (std::int64_t{1} << 20)) throw InputError("prime too large");
    return BaseRing(RingKind::pair_product, p, 0, RingKind::pair_product);
  }

  RingKind kind() const noexcept { return kind_; }
  /// n for Modular, p for PairProduct, 0 otherwise.
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t quadratic_d() const noexcept { return d_; }
  RingKind quadratic_base() const noexcept { return base_; }

  std::int64_t characteristic() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ == RingKind::modular || kind_ == RingKind::pair_product; }

  bool is_domain() const noexcept {
    switch (kind_) {
      case RingKind::modular: return detail::is_prime(modulus_);
      case RingKind::pair_product: return false;
      default: return true;
    }
  }

  bool is_field() const noexcept {
    switch (kind_) {
      case RingKind::rational: return true;
      case RingKind::modular: return detail::is_prime(modulus_);
      case RingKind::quadratic: return base_ == RingKind::rational;
      default: return false;
    }
  }

  std::optional<std::uint64_t> cardinality() const noexcept {
    if (kind_ == RingKind::modular) return static_cast<std::uint64_t>(modulus_);
    if (kind_ == RingKind::pair_product) return static_cast<std::uint64_t>(modulus_ * modulus_);
    return std::nullopt;
  }

  std::string name() const {
    switch (kind_) {
      case RingKind::integer: return "Z";
      case RingKind::rational: return "Q";
      case RingKind::modular: return "Z/" + std::to_string(modulus_);
      case RingKind::quadratic:
        return (base_ == RingKind::integer ? "Z[sqrt(" : "Q(sqrt(") + std::to_string(d_) +
               (base_ == RingKind::integer ? ")]" : "))");
      case RingKind::pair_product:
        return "F_" + std::to_string(modulus_) + " x F_" + std::to_string(modulus_);
    }
    return "?";
  }

  bool contains(const RingValue& v) const {
    switch (kind_) {
      case RingKind::integer: return std::holds_alternative<Integer>(v);
      case RingKind::rational: return std::holds_alternative<Rational>(v);
      case RingKind::modular: {
        auto* r = std::get_if<Residue>(&v);
        return r && r->value >= 0 && r->value < modulus_;
      }
      case RingKind::quadratic: {
        auto* q = std::get_if<QuadraticValue>(&v);
        if (!q) return false;
        return base_ == RingKind::rational || (detail::is_integral(q->a) && detail::is_integral(q->b));
      }
      case RingKind::pair_product: {
        auto* p = std::get_if<PairValue>(&v);
        return p && p->x >= 0 && p->x < modulus_ && p->y >= 0 && p->y < modulus_;
      }
    }
    return false;
  }

  const RingValue& require(const RingValue& v) const {
    if (!contains(v)) throw InputError("value is not an element of " + name());
    return v;
  }

  RingValue from_int(std::int64_t k) const {
    switch (kind_) {
      case RingKind::integer: return Integer(k);
      case RingKind::rational: return Rational(k);
      case RingKind::modular: return Residue{detail::mod_reduce(k, modulus_)};
      case RingKind::quadratic: return QuadraticValue{Rational(k), Rational(0)};
      case RingKind::pair_product: {
        std::int64_t r = detail::mod_reduce(k, modulus_);
        return PairValue{r, r};
      }
    }
    return Integer(0);
  }

  RingValue zero() const { return from_int(0); }
  RingValue one() const { return from_int(1); }

  /// The adjoined square root w; only for Quadratic rings.
  RingValue omega() const {
    if (kind_ != RingKind::quadratic) throw InputError("omega only exists in quadratic rings");
    return QuadraticValue{Rational(0), Rational(1)};
  }

  /// Generators used when a property must be checked on an infinite ring.
  std::vector<RingValue> generators() const {
    std::vector<RingValue> gens{one()};
    if (kind_ == RingKind::quadratic) gens.push_back(omega());
    if (kind_ == RingKind::pair_product) {
      gens.push_back(PairValue{1, 0});
      gens.push_back(PairValue{0, 1});
    }
    return gens;
  }

  RingValue add(const RingValue& a, const RingValue& b) const {
    require(a);
    require(b);
    switch (kind_) {
      case RingKind::integer: return std::get<Integer>(a) + std::get<Integer>(b);
      case RingKind::rational: return Rational(std::get<Rational>(a) + std::get<Rational>(b));
      case RingKind::modular:
        return Residue{detail::mod_reduce(std::get<Residue>(a).value + std::get<Residue>(b).value, modulus_)};
      case RingKind::quadratic: {
        const auto& x = std::get<QuadraticValue>(a);
        const auto& y = std::get<QuadraticValue>(b);
        return QuadraticValue{x.a + y.a, x.b + y.b};
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        const auto& y = std::get<PairValue>(b);
        return PairValue{(x.x + y.x) % modulus_, (x.y + y.y) % modulus_};
      }
    }
    return a;
  }

  RingValue neg(const RingValue& a) const {
    require(a);
    switch (kind_) {
      case RingKind::integer: return Integer(-std::get<Integer>(a));
      case RingKind::rational: return Rational(-std::get<Rational>(a));
      case RingKind::modular: return Residue{detail::mod_reduce(-std::get<Residue>(a).value, modulus_)};
      case RingKind::quadratic: {
        const auto& x = std::get<QuadraticValue>(a);
        return QuadraticValue{-x.a, -x.b};
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        return PairValue{detail::mod_reduce(-x.x, modulus_), detail::mod_reduce(-x.y, modulus_)};
      }
    }
    return a;
  }

  RingValue sub(const RingValue& a, const RingValue& b) const { return add(a, neg(b)); }

  RingValue mul(const RingValue& a, const RingValue& b) const {
    require(a);
    require(b);
    switch (kind_) {
      case RingKind::integer: return Integer(std::get<Integer>(a) * std::get<Integer>(b));
      case RingKind::rational: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
      case RingKind::modular:
        return Residue{detail::mod_mul(std::get<Residue>(a).value, std::get<Residue>(b).value, modulus_)};
      case RingKind::quadratic: {
        const auto& x = std::get<QuadraticValue>(a);
        const auto& y = std::get<QuadraticValue>(b);
        return QuadraticValue{x.a * y.a + Rational(d_) * x.b * y.b, x.a * y.b + x.b * y.a};
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        const auto& y = std::get<PairValue>(b);
        return PairValue{x.x * y.x % modulus_, x.y * y.y % modulus_};
      }
    }
    return a;
  }

  RingValue pow(RingValue base, std::uint64_t e) const {
    RingValue acc = one();
    while (e > 0) {
      if (e & 1U) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return acc;
  }

  bool is_zero(const RingValue& a) const { return require(a) == zero(); }
  bool is_one(const RingValue& a) const { return require(a) == one(); }

  /// True iff a is not a zero divisor. Exact shortcuts per kind; the tests
  /// cross-check the finite kinds against exhaustive search.
  bool is_regular(const RingValue& a) const {
    require(a);
    switch (kind_) {
      case RingKind::modular:
        return std::gcd(std::get<Residue>(a).value, modulus_) == 1;
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        return x.x != 0 && x.y != 0;
      }
      default: return !is_zero(a);
    }
  }

  std::optional<RingValue> try_invert(const RingValue& a) const {
    require(a);
    switch (kind_) {
      case RingKind::integer: {
        const auto& v = std::get<Integer>(a);
        if (v == 1 || v == -1) return RingValue(v);
        return std::nullopt;
      }
      case RingKind::rational: {
        const auto& v = std::get<Rational>(a);
        if (v == 0) return std::nullopt;
        return RingValue(Rational(1 / v));
      }
      case RingKind::modular: {
        auto inv = detail::mod_inverse(std::get<Residue>(a).value, modulus_);
        if (!inv) return std::nullopt;
        return RingValue(Residue{*inv});
      }
      case RingKind::quadratic: {
        auto inv = quadratic_inverse(std::get<QuadraticValue>(a));
        if (!inv || !contains(*inv)) return std::nullopt;
        return inv;
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        auto ix = detail::mod_inverse(x.x, modulus_);
        auto iy = detail::mod_inverse(x.y, modulus_);
        if (!ix || !iy) return std::nullopt;
        return RingValue(PairValue{*ix, *iy});
      }
    }
    return std::nullopt;
  }

  /// Some q in the ring with q*b = a, or nullopt if b does not divide a.
  std::optional<RingValue> divide(const RingValue& a, const RingValue& b) const {
    require(a);
    require(b);
    switch (kind_) {
      case RingKind::integer: {
        const auto& x = std::get<Integer>(a);
        const auto& y = std::get<Integer>(b);
        if (y == 0) return x == 0 ? std::optional<RingValue>(zero()) : std::nullopt;
        if (x % y != 0) return std::nullopt;
        return RingValue(Integer(x / y));
      }
      case RingKind::quadratic: {
        if (is_zero(b)) return is_zero(a) ? std::optional<RingValue>(zero()) : std::nullopt;
        RingValue q = quadratic_mul_unchecked(std::get<QuadraticValue>(a),
                                              std::get<QuadraticValue>(*quadratic_inverse(std::get<QuadraticValue>(b))));
        if (!contains(q)) return std::nullopt;
        return q;
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        const auto& y = std::get<PairValue>(b);
        auto component = [this](std::int64_t num, std::int64_t den) -> std::optional<std::int64_t> {
          if (den == 0) return num == 0 ? std::optional<std::int64_t>(0) : std::nullopt;
          return detail::mod_mul(num, *detail::mod_inverse(den, modulus_), modulus_);
        };
        auto qx = component(x.x, y.x);
        auto qy = component(x.y, y.y);
        if (!qx || !qy) return std::nullopt;
        return RingValue(PairValue{*qx, *qy});
      }
      default: {
        if (auto inv = try_invert(b)) return mul(a, *inv);
        if (kind_ == RingKind::modular) {
          for (std::int64_t q = 0; q < modulus_; ++q)
            if (mul(Residue{q}, b) == a) return RingValue(Residue{q});
          return std::nullopt;
        }
        return is_zero(a) ? std::optional<RingValue>(zero()) : std::nullopt;
      }
    }
  }

  bool admits(Automorphism s) const noexcept {
    switch (s) {
      case Automorphism::identity: return true;
      case Automorphism::quadratic_conjugation: return kind_ == RingKind::quadratic;
      case Automorphism::pair_swap: return kind_ == RingKind::pair_product;
    }
    return false;
  }

  /// Automorphisms other than the identity that this ring admits.
  std::vector<Automorphism> nontrivial_automorphisms() const {
    if (kind_ == RingKind::quadratic) return {Automorphism::quadratic_conjugation};
    if (kind_ == RingKind::pair_product) return {Automorphism::pair_swap};
    return {};
  }

  RingValue apply(Automorphism s, const RingValue& a) const {
    if (!admits(s)) throw InputError(std::string("automorphism '") + to_string(s) + "' does not act on " + name());
    require(a);
    switch (s) {
      case Automorphism::identity: return a;
      case Automorphism::quadratic_conjugation: {
        const auto& x = std::get<QuadraticValue>(a);
        return QuadraticValue{x.a, -x.b};
      }
      case Automorphism::pair_swap: {
        const auto& x = std::get<PairValue>(a);
        return PairValue{x.y, x.x};
      }
    }
    return a;
  }

  /// All elements of a finite ring in a fixed order: residues ascending,
  /// pairs by first then second coordinate.
  std::vector<RingValue> enumerate() const {
    if (!is_finite()) throw InputError("cannot enumerate infinite ring " + name());
    std::vector<RingValue> out;
    out.reserve(*cardinality());
    if (kind_ == RingKind::modular) {
      for (std::int64_t k = 0; k < modulus_; ++k) out.emplace_back(Residue{k});
    } else {
      for (std::int64_t x = 0; x < modulus_; ++x)
        for (std::int64_t y = 0; y < modulus_; ++y) out.emplace_back(PairValue{x, y});
    }
    return out;
  }

  /// Position of a in enumerate().
  std::size_t index_of(const RingValue& a) const {
    require(a);
    if (kind_ == RingKind::modular) return static_cast<std::size_t>(std::get<Residue>(a).value);
    if (kind_ == RingKind::pair_product) {
      const auto& x = std::get<PairValue>(a);
      return static_cast<std::size_t>(x.x * modulus_ + x.y);
    }
    throw InputError("cannot index elements of infinite ring " + name());
  }

  /// Quotient field for domains. Fields map to themselves.
  BaseRing fraction_field() const {
    if (!is_domain()) throw DomainError(name() + " is not a domain");
    if (kind_ == RingKind::integer) return rationals();
    if (kind_ == RingKind::quadratic) return quadratic(d_, RingKind::rational);
    return *this;
  }

  /// Image of a under the embedding into fraction_field().
  RingValue to_fraction_field(const RingValue& a) const {
    require(a);
    if (kind_ == RingKind::integer) return Rational(std::get<Integer>(a));
    return a;
  }

  std::string format(const RingValue& a) const {
    require(a);
    switch (kind_) {
      case RingKind::integer: return std::get<Integer>(a).str();
      case RingKind::rational: return std::get<Rational>(a).str();
      case RingKind::modular: return std::to_string(std::get<Residue>(a).value);
      case RingKind::quadratic: {
        const auto& x = std::get<QuadraticValue>(a);
        return "(" + x.a.str() + ", " + x.b.str() + ")";
      }
      case RingKind::pair_product: {
        const auto& x = std::get<PairValue>(a);
        return "(" + std::to_string(x.x) + ", " + std::to_string(x.y) + ")";
      }
    }
    return "?";
  }

  bool operator==(const BaseRing&) const = default;

 private:
  BaseRing(RingKind kind, std::int64_t modulus, std::int64_t d, RingKind base)
      : kind_(kind), modulus_(modulus), d_(d), base_(base) {}

  RingValue quadratic_mul_unchecked(const QuadraticValue& x, const QuadraticValue& y) const {
    return QuadraticValue{x.a * y.a + Rational(d_) * x.b * y.b, x.a * y.b + x.b * y.a};
  }

  // Inverse in Q(w); nullopt only for zero.
  std::optional<RingValue> quadratic_inverse(const QuadraticValue& x) const {
    Rational norm = x.a * x.a - Rational(d_) * x.b * x.b;
    if (norm == 0) return std::nullopt;
    return RingValue(QuadraticValue{Rational(x.a / norm), Rational(-x.b / norm)});
  }

  RingKind kind_;
  std::int64_t modulus_;
  std::int64_t d_;
  RingKind base_;
};

/// Single entry point mirroring the arith operation: add and mul need b, neg ignores it.
inline RingValue arith(const BaseRing& ring, ArithOp op, const RingValue& a,
                       const std::optional<RingValue>& b = std::nullopt) {
  switch (op) {
    case ArithOp::neg: return ring.neg(a);
    case ArithOp::add:
    case ArithOp::mul:
      if (!b) throw InputError("binary operation needs two operands");
      return op == ArithOp::add ? ring.add(a, *b) : ring.mul(a, *b);
  }
  return a;
}

/// Quadratic literal helper: a + b*w.
inline RingValue quadratic_value(std::int64_t a, std::int64_t b) {
  return QuadraticValue{Rational(a), Rational(b)};
}

inline RingValue rational_value(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  // Boost rejects a negative denominator, so move the sign first.
  if (den < 0) return Rational(-Integer(num), -Integer(den));
  return Rational(Integer(num), Integer(den));
}

}  // namespace crystal
