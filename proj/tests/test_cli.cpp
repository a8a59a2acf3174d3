#include <gtest/gtest.h>

#include <fstream>

#include "crystal/cli.hpp"
#include "fixtures.hpp"

using namespace crystal;
using cli::execute;

namespace {

std::string path(const std::string& name) { return fixtures::data_path(name); }

const nlohmann::json& check(const nlohmann::json& report, const std::string& name) {
  for (const auto& c : report.at("checks"))
    if (c.at("name") == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Cli, ValidateGaussian) {
  auto r = execute({"validate", path("gaussian.json")});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  for (const auto& c : r.report.at("checks")) EXPECT_EQ(c.at("status"), "pass") << c.at("name");
  EXPECT_EQ(r.report.at("fingerprint").get<std::string>().size(), 16u);
  EXPECT_NE(r.output.find("[pass] cocycle"), std::string::npos);
}

TEST(Cli, SemiprimeF2C2) {
  auto r = execute({"semiprime", path("f2c2.json")});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.report.at("summary").at("semiprime"), false);
  EXPECT_EQ(r.report.at("summary").at("witness"), nlohmann::json::parse("[[0,1],[1,1]]"));
  EXPECT_NE(r.output.find("semiprime: false"), std::string::npos);
}

TEST(Cli, MulGaussian) {
  auto r = execute({"mul", path("gaussian.json"), "[[1,1]]", "[[1,1]]"});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.report.at("summary").at("product"), nlohmann::json::parse("[[0,-1]]"));
}

TEST(Cli, TorsionReportsDisagreementAsVerdict) {
  auto r = execute({"--json", "torsion", path("z4-alpha2.json")});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.report.at("summary").at("agreement"), false);
  EXPECT_EQ(check(r.report, "condition3").at("status"), "fail");
  EXPECT_EQ(check(r.report, "condition5").at("status"), "pass");
  auto parsed = nlohmann::json::parse(r.output);
  EXPECT_EQ(parsed, r.report);
}

TEST(Cli, InverseLemmaOre) {
  auto inv = execute({"inverse", path("gaussian.json"), "1"});
  EXPECT_EQ(inv.exit_code, cli::exit_ok);
  EXPECT_EQ(inv.report.at("summary").at("inverse"), nlohmann::json::parse("[[1,[-1,1]]]"));

  auto lemma = execute({"lemma14", path("skew-conjugation.json"), "--sample", "[0,1]"});
  EXPECT_EQ(lemma.exit_code, cli::exit_ok);
  EXPECT_EQ(lemma.report.at("summary").at("passed"), true);

  auto ore = execute({"ore", path("skew-conjugation.json"), "[[1,[0,1]]]", "[1,1]"});
  EXPECT_EQ(ore.exit_code, cli::exit_ok);
  EXPECT_EQ(ore.report.at("summary").at("s_prime"), nlohmann::json::parse("[2,0]"));
  EXPECT_EQ(ore.report.at("summary").at("r_prime"), nlohmann::json::parse("[[1,[-1,1]]]"));

  auto right = execute({"ore", "--right", path("skew-conjugation.json"), "[[1,[0,1]]]", "[1,1]"});
  EXPECT_EQ(right.exit_code, cli::exit_ok);
  EXPECT_EQ(right.report.at("summary").at("side"), "right");
}

TEST(Cli, Maschke) {
  auto r = execute({"maschke", path("f3c2.json"), path("f3c2-regular-module.json"), "--projection", "[[0,0],[1,1]]"});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  const auto& s = r.report.at("summary");
  EXPECT_EQ(s.at("lambda"), nlohmann::json::parse("[[2,2],[2,2]]"));
  EXPECT_EQ(s.at("projection_a_linear"), false);
  EXPECT_EQ(s.at("projection_witness"), nlohmann::json::parse("[1,0]"));
  EXPECT_EQ(s.at("idempotent"), true);
  EXPECT_EQ(s.at("a_linear"), true);
  EXPECT_EQ(s.at("same_image"), true);

  auto split = execute({"maschke", path("f3c2.json"), path("f3c2-regular-module.json"), "--submodule", "[[1,1]]"});
  EXPECT_EQ(split.report.at("summary").at("lambda"), nlohmann::json::parse("[[2,2],[2,2]]"));

  auto f2 = execute({"maschke", path("f2c2.json"), path("f2c2-regular-module.json"), "--submodule", "[[1,1]]"});
  EXPECT_EQ(f2.exit_code, cli::exit_usage);
  EXPECT_NE(f2.report.at("error").get<std::string>().find("not invertible"), std::string::npos);
}

TEST(Cli, FuzzSummary) {
  auto r = execute({"--seed", "1", "--trials", "50", "fuzz", path("fuzz-z4-cyclic.json")});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.report.at("summary").at("pass"), 50);
  EXPECT_EQ(r.report.at("summary").at("eq1_failures"), 0);
  EXPECT_GE(r.report.at("summary").at("torsion_mismatches").get<int>(), 1);
  EXPECT_EQ(r.report.at("trials").size(), 50u);

  auto skew = execute({"--seed", "2", "fuzz", path("fuzz-pair2-skew.json")});
  EXPECT_EQ(skew.exit_code, cli::exit_ok);
  EXPECT_EQ(skew.report.at("summary").at("pass"), skew.report.at("summary").at("trials"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(execute({}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"frobnicate"}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"validate"}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"validate", path("missing.json")}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"mul", path("gaussian.json"), "[[5,1]]", "[[1,1]]"}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"semiprime", path("gaussian.json")}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"--max-size", "8", "semiprime", path("f3c2.json")}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"inverse", path("z4-alpha2.json"), "1"}).exit_code, cli::exit_usage);
  EXPECT_EQ(execute({"--help"}).exit_code, cli::exit_ok);
  auto bad = execute({"--json", "validate", path("missing.json")});
  EXPECT_EQ(nlohmann::json::parse(bad.output).at("exit"), cli::exit_usage);
}

TEST(Cli, FailedChecksKeepExitZero) {
  auto r = execute({"validate", path("z4-alpha2.json")});
  EXPECT_EQ(r.exit_code, cli::exit_ok);
  EXPECT_EQ(r.report.at("summary").at("crystalline"), false);
  EXPECT_EQ(check(r.report, "alpha_regular").at("status"), "fail");
}

TEST(CliProperty, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> runs{
      {"--json", "validate", path("quaternion.json")},
      {"--json", "torsion", path("z4-alpha2.json")},
      {"--json", "semiprime", path("f2c2.json")},
      {"--json", "--seed", "7", "--trials", "30", "fuzz", path("fuzz-z4-cyclic.json")},
      {"--json", "--seed", "7", "fuzz", path("fuzz-pair2-skew.json")}};
  for (const auto& args : runs) {
    auto a = execute(args), b = execute(args);
    EXPECT_EQ(a.output, b.output) << args[1];
  }
  auto s1 = execute({"--json", "--seed", "1", "--trials", "30", "fuzz", path("fuzz-z4-cyclic.json")});
  auto s2 = execute({"--json", "--seed", "2", "--trials", "30", "fuzz", path("fuzz-z4-cyclic.json")});
  EXPECT_NE(s1.output, s2.output);
}

TEST(CliProperty, PrintedWitnessesReverify) {
  // Validate: every witness in the report is replayed through the library.
  auto d = fixtures::datum("quaternion.json").with_alpha(1, 2, Integer(3));
  auto tmp = testing::TempDir() + "corrupted.json";
  {
    std::ofstream out(tmp);
    out << io::datum_to_json(d).dump();
  }
  auto r = execute({"validate", tmp});
  ASSERT_EQ(r.exit_code, cli::exit_ok);
  for (const auto& c : r.report.at("checks")) {
    if (c.at("status") == "pass") continue;
    ASSERT_TRUE(c.contains("witness"));
    CheckResult replay{c.at("name").get<std::string>(), false};
    Witness w;
    for (const auto& e : c.at("witness").at("elements")) w.elements.push_back(e.get<std::size_t>());
    if (c.at("witness").contains("value")) w.value = io::parse_value(d.ring(), c.at("witness").at("value"));
    replay.witness = w;
    EXPECT_TRUE(witness_reverifies(d, replay)) << c.at("name");
  }

  auto s = execute({"semiprime", path("z4-alpha2.json")});
  auto A = fixtures::algebra("z4-alpha2.json");
  auto x = io::parse_element(A, s.report.at("summary").at("witness"));
  EXPECT_TRUE(verify_semiprime_witness(x));
}
