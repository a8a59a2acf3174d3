#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "crystal/datum.hpp"
#include "crystal/graded.hpp"
#include "crystal/matrix.hpp"
#include "crystal/validation.hpp"

namespace crystal::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Ring descriptors
//   {"kind":"integer"} {"kind":"rational"} {"kind":"modular","n":4}
//   {"kind":"quadratic","d":-1,"base":"integer"} {"kind":"pair","p":2}

inline BaseRing parse_ring(const json& j) {
  try {
    const std::string kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
    if (kind == "integer") return BaseRing::integers();
    if (kind == "rational") return BaseRing::rationals();
    if (kind == "modular") return BaseRing::modular(j.at("n").get<std::int64_t>());
    if (kind == "pair") return BaseRing::pair_product(j.at("p").get<std::int64_t>());
    if (kind == "quadratic") {
      std::string base = j.value("base", std::string("integer"));
      if (base != "integer" && base != "rational") throw InputError("quadratic base must be integer or rational");
      return BaseRing::quadratic(j.at("d").get<std::int64_t>(),
                                 base == "integer" ? RingKind::integer : RingKind::rational);
    }
    throw InputError("unknown ring kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ring descriptor: ") + e.what());
  }
}

inline json ring_to_json(const BaseRing& R) {
  switch (R.kind()) {
    case RingKind::integer: return {{"kind", "integer"}};
    case RingKind::rational: return {{"kind", "rational"}};
    case RingKind::modular: return {{"kind", "modular"}, {"n", R.modulus()}};
    case RingKind::pair_product: return {{"kind", "pair"}, {"p", R.modulus()}};
    case RingKind::quadratic:
      return {{"kind", "quadratic"},
              {"d", R.quadratic_d()},
              {"base", R.quadratic_base() == RingKind::integer ? "integer" : "rational"}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Ring-value literals
//   Integer: decimal string or number     Rational: [num, den] (or an integer)
//   Modular: integer                      Quadratic: [a, b]     Pair: [x, y]

namespace detail {

inline Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError("not a decimal integer: '" + s + "'");
    return Integer(s);
  }
  throw InputError("expected an integer literal, got " + j.dump());
}

inline Rational parse_rational(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("rational literal must be [num, den]");
    Integer den = parse_integer(j[1]);
    if (den == 0) throw InputError("rational literal has zero denominator");
    Integer num = parse_integer(j[0]);
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
  }
  return Rational(parse_integer(j));
}

inline std::int64_t parse_residue(const json& j, std::int64_t n) {
  Integer v = parse_integer(j) % n;
  if (v < 0) v += n;
  return static_cast<std::int64_t>(v);
}

inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(boost::multiprecision::numerator(q)),
                      integer_to_json(boost::multiprecision::denominator(q))});
}

}  // namespace detail

inline RingValue parse_value(const BaseRing& R, const json& j) {
  switch (R.kind()) {
    case RingKind::integer: return detail::parse_integer(j);
    case RingKind::rational: return detail::parse_rational(j);
    case RingKind::modular: return Residue{detail::parse_residue(j, R.modulus())};
    case RingKind::pair_product:
      if (!j.is_array() || j.size() != 2) throw InputError("pair literal must be [x, y]");
      return PairValue{detail::parse_residue(j[0], R.modulus()), detail::parse_residue(j[1], R.modulus())};
    case RingKind::quadratic: {
      QuadraticValue q;
      if (j.is_array()) {
        if (j.size() != 2) throw InputError("quadratic literal must be [a, b]");
        q = QuadraticValue{detail::parse_rational(j[0]), detail::parse_rational(j[1])};
      } else {
        q = QuadraticValue{detail::parse_rational(j), Rational(0)};
      }
      return R.require(RingValue(q));
    }
  }
  throw InputError("unsupported ring");
}

inline json value_to_json(const BaseRing& R, const RingValue& v) {
  R.require(v);
  switch (R.kind()) {
    case RingKind::integer: return detail::integer_to_json(std::get<Integer>(v));
    case RingKind::rational: return detail::rational_to_json(std::get<Rational>(v));
    case RingKind::modular: return std::get<Residue>(v).value;
    case RingKind::pair_product: {
      const auto& p = std::get<PairValue>(v);
      return json::array({p.x, p.y});
    }
    case RingKind::quadratic: {
      const auto& q = std::get<QuadraticValue>(v);
      auto comp = [&R](const Rational& x) {
        return R.quadratic_base() == RingKind::integer ? detail::integer_to_json(boost::multiprecision::numerator(x))
                                                       : detail::rational_to_json(x);
      };
      return json::array({comp(q.a), comp(q.b)});
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Groups: {"type":"cyclic","order":n} {"type":"product","factors":[...]}
//         {"type":"table","table":[[...]]}

inline Group parse_group(const json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "cyclic") {
      auto n = j.at("order").get<std::int64_t>();
      if (n < 1) throw InputError("cyclic group order must be positive");
      return Group::cyclic(static_cast<std::size_t>(n));
    }
    if (type == "product") {
      const auto& factors = j.at("factors");
      if (!factors.is_array() || factors.empty()) throw InputError("product needs a nonempty factor list");
      Group g = parse_group(factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i) g = Group::product(g, parse_group(factors[i]));
      return g;
    }
    if (type == "table") {
      std::vector<std::vector<std::size_t>> rows;
      for (const auto& row : j.at("table")) {
        std::vector<std::size_t> r;
        for (const auto& v : row) {
          auto x = v.get<std::int64_t>();
          if (x < 0) throw InputError("group table entry out of range");
          r.push_back(static_cast<std::size_t>(x));
        }
        rows.push_back(std::move(r));
      }
      return Group::from_table(rows);
    }
    throw InputError("unknown group type '" + type + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
}

inline json group_to_json(const Group& g) {
  return {{"type", "table"}, {"table", g.rows()}};
}

inline Automorphism parse_automorphism(const json& j) {
  if (!j.is_string()) throw InputError("automorphism must be a string");
  const auto s = j.get<std::string>();
  if (s == "identity") return Automorphism::identity;
  if (s == "conjugation") return Automorphism::quadratic_conjugation;
  if (s == "swap") return Automorphism::pair_swap;
  throw InputError("unknown automorphism '" + s + "'");
}

// ---------------------------------------------------------------------------
// Datum files: {"ring":..., "group":..., "sigma":[...], "alpha":[[...]], "samples":[...]}
// "sigma" defaults to identity everywhere, "samples" to empty.

inline CrystalDatum parse_datum(const json& j) {
  try {
    if (!j.is_object()) throw InputError("datum must be an object");
    BaseRing R = parse_ring(j.at("ring"));
    Group G = parse_group(j.at("group"));
    const std::size_t n = G.order();
    std::vector<Automorphism> sigma(n, Automorphism::identity);
    if (j.contains("sigma")) {
      sigma.clear();
      for (const auto& s : j.at("sigma")) sigma.push_back(parse_automorphism(s));
    }
    const auto& rows = j.at("alpha");
    if (!rows.is_array() || rows.size() != n) throw InputError("alpha must have |G| rows");
    std::vector<RingValue> alpha;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw InputError("alpha must have |G| columns");
      for (const auto& v : row) alpha.push_back(parse_value(R, v));
    }
    std::vector<RingValue> samples;
    if (j.contains("samples"))
      for (const auto& v : j.at("samples")) samples.push_back(parse_value(R, v));
    return CrystalDatum(R, G, std::move(sigma), std::move(alpha), std::move(samples));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed datum: ") + e.what());
  }
}

inline json datum_to_json(const CrystalDatum& d) {
  json sigma = json::array();
  for (auto s : d.sigmas()) sigma.push_back(to_string(s));
  json alpha = json::array();
  for (std::size_t g = 0; g < d.order(); ++g) {
    json row = json::array();
    for (std::size_t h = 0; h < d.order(); ++h) row.push_back(value_to_json(d.ring(), d.alpha(g, h)));
    alpha.push_back(std::move(row));
  }
  json out{{"ring", ring_to_json(d.ring())}, {"group", group_to_json(d.group())}, {"sigma", sigma}, {"alpha", alpha}};
  if (!d.samples().empty()) {
    json samples = json::array();
    for (const auto& s : d.samples()) samples.push_back(value_to_json(d.ring(), s));
    out["samples"] = samples;
  }
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("malformed literal '" + text + "': " + e.what());
  }
}

inline CrystalDatum load_datum(const std::string& path) { return parse_datum(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Graded elements: [[g, literal], ...], e.g. [[0,1],[1,-1]] for u_e - u_g.

inline GradedElement parse_element(const AlgebraPtr& alg, const json& j) {
  if (!j.is_array()) throw InputError("graded element literal must be a list of [index, value]");
  GradedElement x(alg);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw InputError("graded element term must be [index, value]");
    auto g = term[0].get<std::int64_t>();
    if (g < 0 || static_cast<std::size_t>(g) >= alg->group().order()) throw InputError("group index out of range");
    x.accumulate(static_cast<std::size_t>(g), parse_value(alg->ring(), term[1]));
  }
  return x;
}

inline json element_to_json(const GradedElement& x) {
  json out = json::array();
  for (const auto& [g, r] : x.terms()) out.push_back(json::array({g, value_to_json(x.algebra()->ring(), r)}));
  return out;
}

// ---------------------------------------------------------------------------
// Matrices and row vectors

inline RowVector parse_row(const BaseRing& R, const json& j) {
  if (!j.is_array()) throw InputError("row vector literal must be a list");
  RowVector v;
  for (const auto& x : j) v.push_back(parse_value(R, x));
  return v;
}

inline Matrix parse_matrix(const BaseRing& R, const json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) throw InputError("matrix must have " + std::to_string(rank) + " rows");
  std::vector<RowVector> rows;
  for (const auto& r : j) {
    rows.push_back(parse_row(R, r));
    if (rows.back().size() != rank) throw InputError("matrix must have " + std::to_string(rank) + " columns");
  }
  if (rank == 0) return Matrix();
  return Matrix::from_rows(rows);
}

inline json row_to_json(const BaseRing& R, const RowVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(value_to_json(R, x));
  return out;
}

inline json matrix_to_json(const BaseRing& R, const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(row_to_json(R, m.row(i)));
  return out;
}

inline json witness_to_json(const BaseRing& R, const Witness& w) {
  json out{{"elements", w.elements}};
  if (w.value) out["value"] = value_to_json(R, *w.value);
  return out;
}

inline json check_to_json(const BaseRing& R, const CheckResult& c) {
  json out{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"evaluated", c.evaluated},
           {"failures", c.failures}};
  if (c.witness) out["witness"] = witness_to_json(R, *c.witness);
  return out;
}

/// 64-bit FNV-1a of the canonical JSON form, as 16 hex digits.
inline std::string fingerprint(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace crystal::io
