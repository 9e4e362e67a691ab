#include <gtest/gtest.h>

#include "altlab/cli.hpp"
#include "altlab/report.hpp"

using namespace altlab;

namespace {

CommandResult run(std::vector<std::string> args, unsigned workers = 1) { return run_cli(args, Parallelism{workers}); }

Json body_of(const CommandResult& res) { return Json::parse(res.out).at("body"); }

}  // namespace

TEST(CliHilbert, Examples) {
  auto res = run({"hilbert", "--n", "2", "--k", "1", "--cutoff-x", "2", "--cutoff-y", "2"});
  ASSERT_EQ(res.exit_code, kExitPass) << res.err;
  const Json table = body_of(res).at("table");
  ASSERT_EQ(table.size(), 3u);
  for (const auto& row : table) EXPECT_EQ(row.size(), 3u);
  EXPECT_EQ(table[1][1], 2);
  EXPECT_EQ(table[0][0], 0);

  res = run({"hilbert", "--n", "1", "--k", "2"});
  for (const auto& row : body_of(res).at("table"))
    for (const auto& v : row) EXPECT_EQ(v, 1);
}

TEST(CliHilbert, CsvAndBases) {
  auto res = run({"hilbert", "--n", "2", "--cutoff-x", "1", "--cutoff-y", "1", "--output", "csv"});
  EXPECT_EQ(res.out, "a\\b,0,1\n0,0,1\n1,1,2\n");
  res = run({"hilbert", "--n", "2", "--cutoff-x", "1", "--cutoff-y", "1", "--bases"});
  const Json bases = body_of(res).at("bases");
  ASSERT_EQ(bases.size(), 4u);
  EXPECT_EQ(bases[3].at("vectors").size(), 2u);
  EXPECT_TRUE(Polynomial<Rational>::parse(bases[1].at("vectors")[0].get<std::string>(), 2).is_bihomogeneous({0, 1}));
}

TEST(CliFreeness, Examples) {
  auto res = run({"freeness", "--n", "2", "--k", "1", "--cutoff-x", "4", "--cutoff-y", "4"});
  EXPECT_EQ(res.exit_code, kExitPass) << res.err;
  EXPECT_EQ(body_of(res).at("verdict"), "pass");
  res = run({"freeness", "--n", "1", "--k", "1"});
  EXPECT_EQ(res.exit_code, kExitPass);
  res = run({"freeness", "--n", "2", "--k", "1", "--cutoff-x", "4", "--cutoff-y", "4", "--plant-torsion-x", "1",
             "--plant-torsion-y", "1"});
  EXPECT_EQ(res.exit_code, kExitViolation);
  EXPECT_EQ(body_of(res).at("planted").at("kernel_at_plant"), 1);
}

TEST(CliFreeness, PrimeModeIsNeverFinal) {
  const auto res = run({"freeness", "--n", "2", "--k", "1", "--mode", "prime"});
  EXPECT_EQ(res.exit_code, kExitInconclusive);
  const Json body = body_of(res);
  EXPECT_EQ(body.at("certified"), false);
  EXPECT_EQ(body.at("exploratory_verdict"), "pass");
}

TEST(CliPropAk, Examples) {
  auto res = run({"prop-ak", "--n", "2", "--k", "1", "--tuples", "20"});
  EXPECT_EQ(res.exit_code, kExitPass) << res.err;
  res = run({"prop-ak", "--n", "1", "--k", "2", "--tuples", "10"});
  EXPECT_EQ(res.exit_code, kExitPass);
  res = run({"prop-ak", "--n", "2", "--k", "1", "--samples", "1", "--tuples", "5"});
  EXPECT_EQ(res.exit_code, kExitInconclusive);
  EXPECT_EQ(body_of(res).at("verdict"), "inconclusive");
}

TEST(CliVariety, Examples) {
  auto res = run({"variety", "--n", "2", "--samples", "20"}, 4);
  ASSERT_EQ(res.exit_code, kExitPass) << res.err;
  for (const auto& s : body_of(res).at("strata")) {
    EXPECT_EQ(s.at("jacobian_rank_counts"), Json({{"4", 20}}));
    EXPECT_EQ(s.at("psi_vanishing_ok"), true);
    EXPECT_EQ(s.at("phi_vanishing_ok"), true);
  }
  res = run({"variety", "--n", "1", "--samples", "3"});
  EXPECT_EQ(res.exit_code, kExitPass);
  for (const auto& s : body_of(res).at("strata")) EXPECT_EQ(s.at("jacobian_rank_counts"), Json({{"1", 3}}));
  res = run({"variety", "--n", "2", "--r", "3"});
  EXPECT_EQ(res.exit_code, kExitUsage);
}

TEST(CliSample, PointRoundTrips) {
  const auto res = run({"sample", "--n", "3", "--r", "1", "--seed", "9"});
  ASSERT_EQ(res.exit_code, kExitPass) << res.err;
  const Json body = body_of(res);
  const auto p = mpoint_from_json(body.at("point"));
  EXPECT_TRUE(p == sample_stratum<Rational>(3, 1, 9));
  EXPECT_EQ(body.at("krylov_col_dim"), 2);
  EXPECT_EQ(body.at("krylov_row_dim"), 1);
  EXPECT_EQ(body.at("jacobian_rank"), 9);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--bogus"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--n", "5"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--n", "4", "--k", "2"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--cutoff-x", "9", "--cutoff-y", "9"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--k", "0"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"prop-ak", "--mode", "prime"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"hilbert", "--mode", "prime:7"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"variety", "--output", "csv"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"freeness", "--n", "3", "--cutoff-y", "2"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"sample", "--n", "2"}).exit_code, kExitUsage);
  EXPECT_EQ(run({"freeness", "--plant-torsion-x", "1"}).exit_code, kExitUsage);
}

TEST(CliExitCodes, ForceLiftsCostGuard) {
  const auto res = run({"hilbert", "--n", "5", "--k", "1", "--cutoff-x", "1", "--cutoff-y", "1", "--force"});
  EXPECT_EQ(res.exit_code, kExitPass) << res.err;
}

TEST(CliExitCodes, HelpIsNotAnError) {
  const auto res = run({"--help"});
  EXPECT_EQ(res.exit_code, kExitPass);
  EXPECT_NE(res.out.find("freeness"), std::string::npos);
}

TEST(CliEnvelope, SchemaAndHashes) {
  const std::vector<std::string> args{"hilbert", "--n", "2", "--seed", "3"};
  const Json env = Json::parse(run(args).out);
  EXPECT_EQ(env.at("schema"), "alternant-lab/1");
  EXPECT_EQ(env.at("command"), "hilbert");
  EXPECT_EQ(env.at("command_line").get<std::vector<std::string>>(), args);
  EXPECT_EQ(env.at("config").at("seed"), 3);
  EXPECT_EQ(env.at("hashes").at("body"), sha256_hex(env.at("body").dump()));
  EXPECT_TRUE(env.contains("wall_clock_ms"));
  EXPECT_FALSE(env.at("body").contains("wall_clock_ms"));
}

TEST(CliEnvelope, Sha256KnownAnswer) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CliDeterminism, BodiesIndependentOfWorkers) {
  const std::vector<std::vector<std::string>> commands{
      {"hilbert", "--n", "3", "--k", "2"},
      {"freeness", "--n", "2", "--k", "2", "--cutoff-x", "3", "--cutoff-y", "3"},
      {"prop-ak", "--n", "2", "--k", "2", "--tuples", "20", "--samples", "30"},
      {"variety", "--n", "3", "--samples", "4", "--tuples", "10", "--translates", "3"},
      {"sample", "--n", "2", "--r", "1"},
  };
  for (const auto& c : commands) {
    const auto one = body_of(run(c, 1)).dump();
    EXPECT_EQ(one, body_of(run(c, 8)).dump()) << c[0];
    EXPECT_EQ(one, body_of(run(c, 1)).dump()) << c[0];
  }
}

TEST(CliDeterminism, SeedChangesSampledBodies) {
  const auto a = body_of(run({"sample", "--n", "2", "--r", "1", "--seed", "1"}));
  const auto b = body_of(run({"sample", "--n", "2", "--r", "1", "--seed", "2"}));
  EXPECT_NE(a.dump(), b.dump());
}
