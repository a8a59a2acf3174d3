#pragma once

#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crystal/fuzz.hpp"
#include "crystal/io.hpp"
#include "crystal/lemma.hpp"
#include "crystal/maschke.hpp"
#include "crystal/ore.hpp"
#include "crystal/semiprime.hpp"

namespace crystal::cli {

using io::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

struct CliResult {
  int exit_code = exit_ok;
  std::string output;  // text report, or the JSON document with --json
  json report;
};

/// Module file: {"rank": m, "actions": {"<g>": [[...]], ...}}. U_e defaults to I.
inline SemilinearModule parse_module(const AlgebraPtr& alg, const json& j) {
  try {
    const auto& R = alg->ring();
    const auto rank = j.at("rank").get<std::int64_t>();
    if (rank < 0) throw InputError("module rank must be non-negative");
    const auto m = static_cast<std::size_t>(rank);
    const auto& acts = j.at("actions");
    std::vector<Matrix> actions;
    for (std::size_t g = 0; g < alg->group().order(); ++g) {
      const auto key = std::to_string(g);
      if (acts.contains(key))
        actions.push_back(io::parse_matrix(R, acts.at(key), m));
      else if (g == Group::identity)
        actions.push_back(Matrix::identity(R, m));
      else
        throw InputError("module file has no action matrix for group element " + key);
    }
    return SemilinearModule(alg, m, std::move(actions));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed module file: ") + e.what());
  }
}

namespace detail {

// Literal given inline, or "@path" to read it from a file.
inline json literal_or_file(const std::string& text) {
  if (!text.empty() && text.front() == '@') return io::read_json_file(text.substr(1));
  return io::parse_json_text(text);
}

inline json condition_to_json(const BaseRing& R, const std::string& name, const ConditionResult& c) {
  json out{{"name", name}, {"status", c.passed ? "pass" : "fail"}};
  if (c.witness) out["witness"] = io::witness_to_json(R, *c.witness);
  return out;
}

inline std::string render_text(const json& report) {
  std::ostringstream os;
  os << "command: " << report.at("command").get<std::string>() << "\n";
  if (report.contains("fingerprint")) os << "datum: " << report.at("fingerprint").get<std::string>() << "\n";
  if (report.contains("error")) os << "error: " << report.at("error").get<std::string>() << "\n";
  if (report.contains("checks")) {
    for (const auto& c : report.at("checks")) {
      os << "  [" << c.at("status").get<std::string>() << "] " << c.at("name").get<std::string>();
      if (c.contains("witness")) os << "  witness " << c.at("witness").dump();
      os << "\n";
    }
  }
  if (report.contains("summary")) {
    for (const auto& [key, value] : report.at("summary").items())
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

inline void require_reverifies(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what + " witness failed to re-verify");
}

struct Options {
  bool json_output = false;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  bool trials_given = false;
  std::uint64_t max_size = default_semiprime_cap;
};

inline AlgebraPtr load_algebra(const std::string& path, json& report, const std::vector<std::string>& samples = {}) {
  CrystalDatum d = io::load_datum(path);
  if (!samples.empty()) {
    auto all = d.samples();
    for (const auto& s : samples) all.push_back(io::parse_value(d.ring(), io::parse_json_text(s)));
    d = d.with_samples(std::move(all));
  }
  report["fingerprint"] = io::fingerprint(io::datum_to_json(d));
  return Algebra::make(std::move(d));
}

inline void run_validate(const std::string& path, const std::vector<std::string>& samples, json& report) {
  auto alg = load_algebra(path, report, samples);
  const auto& r = alg->report();
  json checks = json::array();
  for (const auto& c : r.checks) {
    if (!c.passed) require_reverifies(witness_reverifies(alg->datum(), c), c.name);
    checks.push_back(io::check_to_json(alg->ring(), c));
  }
  report["checks"] = checks;
  report["summary"] = {{"pre_crystalline_consistent", r.pre_crystalline_consistent},
                       {"centrally_consistent", r.centrally_consistent},
                       {"crystalline", r.crystalline}};
}

inline void run_torsion(const std::string& path, json& report) {
  auto alg = load_algebra(path, report);
  auto p = torsion_profile(alg->datum());
  const auto& R = alg->ring();
  report["checks"] = json::array({condition_to_json(R, "condition3", p.condition3),
                                  condition_to_json(R, "condition4", p.condition4),
                                  condition_to_json(R, "condition5", p.condition5),
                                  condition_to_json(R, "condition6", p.condition6)});
  report["summary"] = {{"agreement", p.agreement}};
}

inline void run_mul(const std::string& path, const std::string& x, const std::string& y, json& report) {
  auto alg = load_algebra(path, report);
  auto a = io::parse_element(alg, io::parse_json_text(x));
  auto b = io::parse_element(alg, io::parse_json_text(y));
  report["summary"] = {{"product", io::element_to_json(a * b)}};
}

inline void run_inverse(const std::string& path, std::int64_t g, json& report) {
  auto alg = load_algebra(path, report);
  if (g < 0 || static_cast<std::size_t>(g) >= alg->group().order()) throw InputError("group index out of range");
  auto v = basis_inverse(alg, static_cast<std::size_t>(g));
  report["summary"] = {{"inverse", io::element_to_json(v)}, {"ring", io::ring_to_json(v.algebra()->ring())}};
}

inline void run_lemma(const std::string& path, const std::vector<std::string>& samples, json& report) {
  auto alg = load_algebra(path, report);
  std::vector<RingValue> xs;
  const AlgebraPtr K = alg->fraction();
  for (const auto& s : samples) xs.push_back(io::parse_value(K->ring(), io::parse_json_text(s)));
  if (xs.empty()) xs = K->ring().generators();
  auto lr = check_lemma_identities(alg, xs);
  json checks = json::array();
  for (const auto& c : lr.checks) checks.push_back(io::check_to_json(K->ring(), c));
  report["checks"] = checks;
  report["summary"] = {{"passed", lr.passed()}, {"field", io::ring_to_json(K->ring())}};
}

inline void run_ore(const std::string& path, const std::string& r_text, const std::string& s_text, bool right,
                    json& report) {
  auto alg = load_algebra(path, report);
  auto r = io::parse_element(alg, io::parse_json_text(r_text));
  auto s = io::parse_value(alg->ring(), io::parse_json_text(s_text));
  auto w = right ? ore_witness_right(r, s) : ore_witness(r, s);
  report["summary"] = {{"side", right ? "right" : "left"},
                       {"r_prime", io::element_to_json(w.r_prime)},
                       {"s_prime", io::value_to_json(alg->ring(), w.s_prime)}};
}

inline void run_maschke(const std::string& datum_path, const std::string& module_path, const std::string& projection,
                        const std::string& submodule, json& report) {
  auto alg = load_algebra(datum_path, report);
  auto m = parse_module(alg, io::read_json_file(module_path));
  const auto& R = alg->ring();
  auto mr = validate_module(m);
  json checks = json::array();
  for (const auto& c : mr.checks) checks.push_back(io::check_to_json(R, c));
  json summary{{"module_valid", mr.passed()}};

  if (!projection.empty() || !submodule.empty()) {
    if (!mr.passed()) throw DomainError("module failed validation");
    Matrix lambda;
    Matrix p;
    if (!projection.empty()) {
      p = io::parse_matrix(R, literal_or_file(projection), m.rank());
      lambda = averaging_projection(m, p);
      auto lin = check_a_linear(m, p);
      summary["projection_a_linear"] = lin.linear;
      if (lin.witness) summary["projection_witness"] = json::array({lin.witness->first, lin.witness->second});
    } else {
      std::vector<RowVector> basis;
      for (const auto& row : literal_or_file(submodule)) basis.push_back(io::parse_row(R, row));
      lambda = split_submodule(m, basis);
      p = lambda;
    }
    summary["lambda"] = io::matrix_to_json(R, lambda);
    summary["idempotent"] = linalg::is_idempotent(R, lambda);
    summary["identity_on_image"] = linalg::rows_fixed_by(R, p, lambda);
    summary["a_linear"] = check_a_linear(m, lambda).linear;
    summary["same_image"] = linalg::rows_fixed_by(R, lambda, p) && linalg::rows_fixed_by(R, p, lambda);
  }
  report["checks"] = checks;
  report["summary"] = summary;
}

inline void run_semiprime(const std::string& path, std::uint64_t max_size, json& report) {
  auto alg = load_algebra(path, report);
  auto v = is_semiprime_finite(alg, max_size);
  auto nil = nilpotent_witness(alg, max_size);
  json summary{{"semiprime", v.semiprime},
               {"method", v.method},
               {"characteristic_coprime", v.characteristic_coprime}};
  if (v.witness) {
    require_reverifies(verify_semiprime_witness(*v.witness, max_size), "semiprime");
    summary["witness"] = io::element_to_json(*v.witness);
  }
  if (nil) summary["nilpotent_witness"] = io::element_to_json(*nil);
  report["summary"] = summary;
}

inline void run_fuzz(const std::string& path, const Options& opt, json& report) {
  json cfg = io::read_json_file(path);
  FuzzConfig config{io::parse_ring(cfg.at("ring")), io::parse_group(cfg.at("group")), 0, FuzzFamily::cyclic};
  const auto family = cfg.value("family", std::string("cyclic"));
  if (family == "skew")
    config.family = FuzzFamily::skew;
  else if (family != "cyclic")
    throw InputError("unknown fuzz family '" + family + "'");
  config.trials = opt.trials_given ? opt.trials : cfg.value("trials", std::size_t{100});
  auto s = fuzz_data(opt.seed, config);
  json trials = json::array();
  for (const auto& t : s.records) {
    json sigma = json::array();
    for (auto a : t.sigma) sigma.push_back(to_string(a));
    json rec{{"seed", t.seed}, {"sigma", sigma}, {"pre_crystalline", t.pre_crystalline}, {"crystalline", t.crystalline}};
    if (t.constant) rec["c"] = io::value_to_json(config.ring, *t.constant);
    if (t.torsion_agreement) rec["torsion_agreement"] = *t.torsion_agreement;
    trials.push_back(std::move(rec));
  }
  report["summary"] = {{"seed", opt.seed},
                       {"family", family},
                       {"trials", s.trials},
                       {"pass", s.passed},
                       {"eq1_failures", s.eq1_failures},
                       {"eq2_failures", s.eq2_failures},
                       {"torsion_mismatches", s.torsion_mismatches}};
  report["trials"] = trials;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Mathematical verdicts
/// ("not semiprime", failed checks) exit 0; malformed input exits 2; an
/// internal invariant violation exits 1.
inline CliResult execute(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with crystalline graded rings", "crystal"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Options opt;
  app.add_flag("--json", opt.json_output, "Emit the machine-readable report");
  app.add_option("--seed", opt.seed, "Master seed for randomized commands");
  auto* trials_opt = app.add_option("--trials", opt.trials, "Number of fuzz trials");
  app.add_option("--max-size", opt.max_size, "Cap on |A| for exhaustive searches");

  std::string datum, second, third, module_path, projection, submodule;
  std::vector<std::string> samples;
  std::int64_t index = 0;
  bool right = false;

  auto* validate = app.add_subcommand("validate", "Check the datum identities");
  validate->add_option("datum", datum)->required();
  validate->add_option("--sample", samples, "Extra ring element for identities over infinite rings");

  auto* torsion = app.add_subcommand("torsion", "Torsion-freeness profile");
  torsion->add_option("datum", datum)->required();

  auto* mul = app.add_subcommand("mul", "Multiply two graded elements");
  mul->add_option("datum", datum)->required();
  mul->add_option("x", second)->required();
  mul->add_option("y", third)->required();

  auto* inverse_cmd = app.add_subcommand("inverse", "Inverse of a basis element u_g");
  inverse_cmd->add_option("datum", datum)->required();
  inverse_cmd->add_option("g", index)->required();

  auto* lemma = app.add_subcommand("lemma14", "Basis-inverse identities over the fraction field");
  lemma->add_option("datum", datum)->required();
  lemma->add_option("--sample", samples, "Ring element x for the commutation identity");

  auto* ore = app.add_subcommand("ore", "Ore witness for (r, s)");
  ore->add_option("datum", datum)->required();
  ore->add_option("r", second)->required();
  ore->add_option("s", third)->required();
  ore->add_flag("--right", right, "Solve r s' = s r' instead of s' r = r' s");

  auto* maschke = app.add_subcommand("maschke", "Module checks and averaging projections");
  maschke->add_option("datum", datum)->required();
  maschke->add_option("module", module_path)->required();
  maschke->add_option("--projection", projection, "R-linear projection matrix literal or @file");
  maschke->add_option("--submodule", submodule, "Submodule basis literal or @file");

  auto* semiprime = app.add_subcommand("semiprime", "Exhaustive semiprimeness test");
  semiprime->add_option("datum", datum)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Validate randomly generated data from a family");
  fuzz->add_option("config", datum)->required();

  CliResult result;
  json report;
  report["args"] = args;
  report["command"] = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    opt.trials_given = trials_opt->count() > 0;
    const std::string command = app.get_subcommands().front()->get_name();
    report["command"] = command;

    if (command == "validate") detail::run_validate(datum, samples, report);
    else if (command == "torsion") detail::run_torsion(datum, report);
    else if (command == "mul") detail::run_mul(datum, second, third, report);
    else if (command == "inverse") detail::run_inverse(datum, index, report);
    else if (command == "lemma14") detail::run_lemma(datum, samples, report);
    else if (command == "ore") detail::run_ore(datum, second, third, right, report);
    else if (command == "maschke") detail::run_maschke(datum, module_path, projection, submodule, report);
    else if (command == "semiprime") detail::run_semiprime(datum, opt.max_size, report);
    else if (command == "fuzz") detail::run_fuzz(datum, opt, report);
    result.exit_code = exit_ok;
  } catch (const CLI::CallForHelp&) {
    result.exit_code = exit_ok;
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = exit_usage;
    report["error"] = e.what();
  } catch (const InputError& e) {
    result.exit_code = exit_usage;
    report["error"] = e.what();
  } catch (const DomainError& e) {
    result.exit_code = exit_usage;
    report["error"] = e.what();
  } catch (const std::exception& e) {
    result.exit_code = exit_internal;
    report["error"] = std::string("internal error: ") + e.what();
  }
  report["exit"] = result.exit_code;
  result.output = opt.json_output ? report.dump(2) + "\n" : detail::render_text(report);
  result.report = std::move(report);
  return result;
}

}  // namespace crystal::cli
