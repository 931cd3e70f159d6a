#include <gtest/gtest.h>

#include "modinv/cli.hpp"
#include "modinv/sampling.hpp"

namespace {

using namespace modinv;
namespace mc = modinv::cli;

const char* kZ4 = R"({
  "group": {"factors": [4]},
  "lambda_generators": [[2]],
  "signals": {
    "d0": [[1,0],[0,0],[0,0],[0,0]],
    "d1": [[0,0],[1,0],[0,0],[0,0]],
    "d2": [[0,0],[0,0],[1,0],[0,0]]
  }
)";

std::string problem(const std::string& extra) { return std::string(kZ4) + (extra.empty() ? "" : ", " + extra) + "}"; }

mc::Result run(const std::string& cmd, const std::string& text, mc::Options opts = {}) {
  return mc::run_text(cmd, text, opts);
}

TEST(Json, SignalRoundTripIsBitExact) {
  sampling::Rng rng(211);
  auto g = sampling::random_group(rng, 64);
  auto s = sampling::random_signal(rng, g);
  auto text = to_json(s).dump();
  auto back = parse_signal(Json::parse(text), g, Side::primal, "");
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    EXPECT_EQ(back.values[i].real(), s.values[i].real());
    EXPECT_EQ(back.values[i].imag(), s.values[i].imag());
  }
  EXPECT_EQ(to_json(back).dump(), text);
}

TEST(Json, PathQualifiedErrors) {
  GroupSpec z4({4});
  try {
    parse_signal(Json::parse(R"([[1,0],[0,0],[0,"x"],[0,0]])"), z4, Side::primal, "/signals/f");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/signals/f/2");
  }
  try {
    parse_group(Json::parse(R"({"factors":[4,1]})"), "/group");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/group/factors/1");
  }
  try {
    parse_element(Json::parse("[4]"), z4, Side::dual, "/lambda_generators/0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/lambda_generators/0/0");
  }
}

TEST(Json, FiberMatrixShape) {
  GroupSpec z4({4});
  auto ctx = make_context(z4, {{Side::dual, {2}}});
  auto j = to_json(mod_zak(Signal::delta(z4, Side::primal, 1), ctx));
  EXPECT_EQ(j["pi"], Json::parse("[[0],[1]]"));
  EXPECT_EQ(j["d"], Json::parse("[[0],[1]]"));
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0].size(), 2u);
}

TEST(Cli, MetricOnDeltaPair) {
  auto r = run("metric", problem(R"("spaces": [{"generators": ["d0"]}, {"generators": ["d1"]}])"));
  ASSERT_EQ(r.exit_code, mc::kExitOk) << r.report.dump();
  EXPECT_EQ(r.report["theta"], 1.0);
  EXPECT_EQ(r.report["argmax_x"], Json::parse("[0]"));
}

TEST(Cli, FrameBoundsOnDelta) {
  mc::Options opts;
  opts.oracle = true;
  auto r = run("frame-bounds", problem(R"("generators": ["d0"])"), opts);
  ASSERT_EQ(r.exit_code, mc::kExitOk) << r.report.dump();
  EXPECT_EQ(r.report["system"]["A"], 1.0);
  EXPECT_EQ(r.report["system"]["B"], 1.0);
  EXPECT_EQ(r.report["system"]["parseval"], true);
  EXPECT_EQ(r.report["oracle"]["parseval"], true);

  opts.measure = Measure::counting;
  auto c = run("frame-bounds", problem(R"("generators": ["d0"])"), opts);
  EXPECT_EQ(c.report["system"]["A"], 2.0);
  EXPECT_EQ(c.report["measure"], "counting");
}

TEST(Cli, AnalyzeEmptyGenerators) {
  auto r = run("analyze", problem(R"("generators": [])"));
  ASSERT_EQ(r.exit_code, mc::kExitOk) << r.report.dump();
  EXPECT_EQ(r.report["dims"], Json::parse("[0,0]"));
  EXPECT_EQ(r.report["total_dim"], 0);
}

TEST(Cli, MembershipAndDecompose) {
  auto m = run("membership", problem(R"("generators": ["d0"], "test_signals": ["d0", "d2"])"));
  ASSERT_EQ(m.exit_code, mc::kExitOk) << m.report.dump();
  EXPECT_EQ(m.report["results"][0]["member"], true);
  EXPECT_EQ(m.report["results"][1]["member"], false);

  auto d = run("decompose", problem(R"("generators": ["d0", "d2"])"));
  ASSERT_EQ(d.exit_code, mc::kExitOk) << d.report.dump();
  EXPECT_EQ(d.report["count"], 2);
  EXPECT_EQ(d.report["verification"]["passed"], true);
}

TEST(Cli, InvarianceCheck) {
  auto r = run("invariance-check",
               R"({"group":{"factors":[4]},"lambda_generators":[[1]],"spanning_set":[[[1,0],[1,0],[0,0],[0,0]]]})");
  ASSERT_EQ(r.exit_code, mc::kExitOk) << r.report.dump();
  EXPECT_EQ(r.report["invariant"], false);
}

TEST(Cli, LimitOfConstantSequence) {
  auto r = run("limit", problem(R"("spaces": [{"generators": ["d0"]}, {"generators": ["d0"]}])"));
  ASSERT_EQ(r.exit_code, mc::kExitOk) << r.report.dump();
  EXPECT_EQ(r.report["dims"], Json::parse("[1,0]"));
  auto bad = run("limit", problem(R"("spaces": [{"generators": ["d0"]}, {"generators": ["d1"]}])"));
  EXPECT_EQ(bad.exit_code, mc::kExitNumerical);
}

TEST(Cli, ValidationErrorsExitOne) {
  auto malformed = run("analyze", "{\"group\": ");
  EXPECT_EQ(malformed.exit_code, mc::kExitValidation);
  EXPECT_NE(malformed.report["error"].get<std::string>().find("byte"), std::string::npos);

  auto unknown = run("analyze", problem(R"("generators": ["nope"])"));
  EXPECT_EQ(unknown.exit_code, mc::kExitValidation);
  EXPECT_EQ(unknown.report["error"].get<std::string>().rfind("/generators/0:", 0), 0u);

  auto short_signal = run("analyze", R"({"group":{"factors":[4]},"generators":[[[1,0]]]})");
  EXPECT_EQ(short_signal.exit_code, mc::kExitValidation);
  EXPECT_EQ(short_signal.report["error"].get<std::string>().rfind("/generators/0:", 0), 0u);

  auto tol = run("membership", problem(R"("generators": ["d0"], "test_signals": [], "tolerance": -1)"));
  EXPECT_EQ(tol.exit_code, mc::kExitValidation);
}

TEST(Cli, OracleSizeGuardExitsTwo) {
  std::string zeros = "[";
  for (int i = 0; i < 4100; ++i) zeros += i ? ",[0,0]" : "[1,0]";
  zeros += "]";
  const std::string text = R"({"group":{"factors":[4100]},"generators":[)" + zeros + "]}";
  EXPECT_EQ(run("decompose", text).exit_code, mc::kExitNumerical);
  mc::Options opts;
  opts.oracle = true;
  EXPECT_EQ(run("frame-bounds", text, opts).exit_code, mc::kExitNumerical);
}

TEST(Cli, DeterministicOutput) {
  const auto text = problem(R"("spaces": [{"generators": ["d0", "d1"]}, {"generators": ["d2"]}])");
  EXPECT_EQ(run("metric", text).report.dump(2), run("metric", text).report.dump(2));
  bool a = false, b = false;
  EXPECT_EQ(mc::demo(a).dump(2), mc::demo(b).dump(2));
  EXPECT_TRUE(a);
}

TEST(Cli, DemoPasses) {
  auto r = mc::run("demo", Json(), {});
  EXPECT_EQ(r.exit_code, mc::kExitOk);
  for (const auto& s : r.report["scenarios"]) EXPECT_TRUE(s["pass"].get<bool>()) << s.dump();
}

}  // namespace
