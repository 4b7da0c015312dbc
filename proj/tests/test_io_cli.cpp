// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "angleforge/counting.hpp"
#include "angleforge/errors.hpp"
#include "angleforge/io.hpp"
#include "cli.hpp"
#include "support/oracles.hpp"

namespace angleforge {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

AlgebraicContext pi4() { return AlgebraicContext::create({-1, 1}, 1, {Rational(1, 2), Rational(3, 2)}); }
AlgebraicContext sqrt2() { return AlgebraicContext::create({-2, 0, 1}, 1, {Rational(1), Rational(2)}); }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("angleforge-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Io, ContextRoundTrip) {
  for (const auto& ctx : {pi4(), sqrt2()}) {
    const json j = context_to_json(ctx);
    EXPECT_EQ(j.at("schema"), kSchema);
    EXPECT_TRUE(context_from_json(j) == ctx);
    EXPECT_TRUE(context_from_json(json::parse(j.dump())) == ctx);
  }
  EXPECT_EQ(context_to_json(sqrt2()).at("minpoly"), json::array({"-2", "0", "1"}));
  EXPECT_EQ(context_to_json(sqrt2()).at("iso"), json::array({"1", "2"}));
}

TEST(Io, ReadersAcceptJsonIntegers) {
  const json j = {{"minpoly", {-2, 0, 1}}, {"b", 1}, {"iso", {1, "2"}}};
  EXPECT_TRUE(context_from_json(j) == sqrt2());
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_THROW(context_from_json(json{{"minpoly", {-2, 0, 1}}, {"b", 1}}), InputError);
  EXPECT_THROW(context_from_json(json{{"minpoly", {-2, 0, 1}}, {"b", 1.5}, {"iso", {1, 2}}}), InputError);
  EXPECT_THROW(context_from_json(json{{"schema", "other/9"}, {"minpoly", {-2, 0, 1}}, {"b", 1}, {"iso", {1, 2}}}),
               InputError);
  EXPECT_THROW(point_from_json(sqrt2(), json{{"re", {"1"}}, {"im", {"0", "1"}}}), InputError);
  EXPECT_THROW(point_from_json(sqrt2(), json{{"re", {"x", "1"}}, {"im", {"0", "1"}}}), InputError);
}

TEST(Io, PointSetRoundTripPreservesHugeCoordinates) {
  const auto ctx = sqrt2();
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 7, 200);
  const std::vector<PlanePoint> pts{{ctx.element({big, -big}), ctx.element({1, 0})}, {ctx.one(), ctx.alpha()}};
  const PointSet back = point_set_from_json(json::parse(point_set_to_json(ctx, pts).dump()));
  EXPECT_TRUE(back.ctx == ctx);
  EXPECT_EQ(back.points, pts);
}

TEST(Io, TriplesJsonIndexesPoints) {
  const auto fam = generate(pi4(), 1);
  const json j = triples_to_json(fam);
  ASSERT_EQ(j.at("triples").size(), 36u);
  EXPECT_EQ(j.at("t"), 1);
  for (std::size_t i = 0; i < fam.triples.size(); ++i) {
    const auto idx = j.at("triples")[i].get<std::vector<std::size_t>>();
    EXPECT_EQ(fam.points[idx[0]], fam.triples[i].apex);
    EXPECT_EQ(j.at("provenance")[i].at("k"), fam.provenance[i].k);
  }
}

TEST(Io, PointsCsv) {
  std::ostringstream out;
  const auto ctx = sqrt2();
  const std::vector<PlanePoint> pts{{ctx.alpha(), ctx.constant(-3)}};
  write_points_csv(out, ctx, pts);
  EXPECT_EQ(out.str().substr(0, 7), "re,im\n1");
  EXPECT_NE(out.str().find("1.41421356237309504880168872"), std::string::npos);
  EXPECT_NE(out.str().find(",-3"), std::string::npos);
}

TEST(Cli, Normalize) {
  const CliResult r = run({"normalize", "--tanpoly", "-1,0,2", "--iso", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("minpoly"), json::array({"-2", "0", "1"}));
  EXPECT_EQ(j.at("b"), "2");
}

TEST(Cli, ConstructDryRunAndFull) {
  CliResult r = run({"construct", "--preset", "pi4", "--t", "1", "--dry-run"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("expected_triples"), "36");
  EXPECT_EQ(j.at("C3"), "361");
  EXPECT_EQ(j.at("dry_run"), true);

  r = run({"construct", "--d1-theta", "pi4", "--n", "5776", "--dry-run"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("t"), 3);

  r = run({"construct", "--preset", "pi4", "--t", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j.at("triples"), "700");
  EXPECT_EQ(j.at("points"), generate(pi4(), 2).points.size());
}

TEST(Cli, ConstructThenCountFromFile) {
  TempDir dir;
  const std::string points = dir / "points.json";
  const std::string triples = dir / "triples.json";
  const std::string csv = dir / "points.csv";
  CliResult r = run({"construct", "--preset", "pi4", "--t", "2", "--out", points, "--triples-out", triples, "--csv-out",
               csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(slurp(triples)).at("triples").size(), 700u);
  EXPECT_EQ(slurp(csv).substr(0, 6), "re,im\n");

  r = run({"count", "--input", points, "--method", "both", "--per-apex"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const auto fam = generate(pi4(), 2);
  const auto expected = count_fast(pi4(), fam.points).total.get_str();
  EXPECT_EQ(j.at("total"), expected);
  EXPECT_EQ(j.at("agree"), true);
  EXPECT_EQ(j.at("brute").at("total"), expected);
  EXPECT_EQ(j.at("fast").at("per_apex").size(), fam.points.size());
}

TEST(Cli, CountWithContextFlagOnHandWrittenFile) {
  TempDir dir;
  const std::string path = dir / "tri.json";
  std::ofstream(path) << R"({"context": {"minpoly": [-1, 1], "b": 1, "iso": ["1/2", "3/2"]},
    "points": [{"re": [0], "im": [0]}, {"re": [1], "im": [0]}, {"re": [1], "im": [1]}]})";
  const CliResult r = run({"count", "--input", path, "--theta-from-context"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("total"), "2");
}

TEST(Cli, VerifyUngarAndAngleCheck) {
  CliResult r = run({"verify-ungar", "--preset", "pi4", "--t", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "t,N,distinct_directions,bound,status\n1,9,8,8,pass\n");
  r = run({"verify-ungar", "--preset", "sqrt2", "--t-max", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1,81,"), std::string::npos);

  r = run({"angle-check", "--preset", "pi4", "--p", "0:0", "--q", "1:0", "--r", "1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "theta_plus\n");
  r = run({"angle-check", "--preset", "sqrt2", "--p", "0,0:0,0", "--q", "1,0:0,0", "--r", R"({"re":["1","0"],"im":["0","1"]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "theta_plus\n");
  r = run({"angle-check", "--preset", "sqrt2", "--p", "0,0:0,0", "--r", "1,0:0,0", "--q", "1,0:0,1"});
  EXPECT_EQ(r.out, "theta_minus\n");
}

TEST(Cli, SweepCsv) {
  const CliResult r = run({"sweep", "--preset", "pi4", "--t-max", "2", "--grid-scale", "1", "--point-budget", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,n,triples,n2logn,ratio");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("1,9,", 0), 0u);
  std::getline(lines, line);
  EXPECT_EQ(line, "2,25,skipped,,");
}

TEST(Cli, InputErrorsExitOne) {
  const std::vector<std::vector<std::string>> bad{
      {"construct", "--preset", "pi4"},
      {"construct", "--preset", "pi4", "--n", "361"},
      {"construct", "--preset", "pi4", "--t", "40", "--triple-budget", "1000"},
      {"construct", "--minpoly", "-1,1", "--b", "0", "--iso", "1/2,3/2", "--t", "1"},
      {"construct", "--minpoly", "-2,0,1", "--b", "1", "--iso", "-2,2", "--t", "1"},
      {"construct", "--minpoly", "-2,0,2", "--b", "1", "--iso", "1,2", "--t", "1"},
      {"construct", "--preset", "pi4", "--context", "x.json", "--t", "1"},
      {"count", "--input", "/nonexistent/points.json"},
      {"angle-check", "--preset", "pi4", "--p", "0:0", "--q", "0:0", "--r", "1:1"},
      {"normalize", "--tanpoly", "1,0,1", "--iso", "0,1"},
      {"bogus"},
      {}};
  for (const auto& args : bad) {
    const CliResult r = run(args);
    EXPECT_EQ(r.code, 1) << ::testing::PrintToString(args) << r.err;
    const json e = json::parse(r.err);
    EXPECT_EQ(e.at("exit_code"), 1);
    EXPECT_EQ(e.at("kind"), "input");
  }
}

TEST(Cli, RightAngleNeedsOptIn) {
  const std::vector<std::string> args{"construct", "--minpoly", "-1,1", "--b", "0", "--iso", "1/2,3/2", "--t", "1",
                                      "--dry-run"};
  EXPECT_EQ(run(args).code, 1);
  auto opted = args;
  opted.push_back("--allow-right-angle");
  const CliResult r = run(opted);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("C3"), "9");  // (4|b|C2^2 + 3)^{2d} with b = 0
}

TEST(Cli, BruteLimitIsAnInputError) {
  TempDir dir;
  const std::string points = dir / "p.json";
  ASSERT_EQ(run({"construct", "--preset", "pi4", "--t", "2", "--out", points}).code, 0);
  const CliResult r = run({"count", "--input", points, "--method", "brute", "--brute-limit", "5"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, OutputsAreDeterministic) {
  TempDir dir;
  for (int i = 0; i < 2; ++i) {
    ASSERT_EQ(run({"construct", "--preset", "sqrt2", "--t", "1", "--out", dir / ("p" + std::to_string(i)),
                   "--triples-out", dir / ("t" + std::to_string(i))})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(dir / "p0"), slurp(dir / "p1"));
  EXPECT_EQ(slurp(dir / "t0"), slurp(dir / "t1"));
}

}  // namespace
}  // namespace angleforge
