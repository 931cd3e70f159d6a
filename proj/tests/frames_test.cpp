#include <gtest/gtest.h>

#include <algorithm>

#include "modinv/frames.hpp"
#include "modinv/sampling.hpp"
#include "oracles.hpp"

namespace {

using namespace modinv;

struct Z4 {
  GroupSpec g{{4}};
  ContextPtr ctx = make_context(g, {{Side::dual, {2}}});
  Signal delta(std::size_t i) const { return Signal::delta(g, Side::primal, i); }
};

// Nonzero spectrum of the frame operator (1/|Lambda|) V V^* and whether V has full column rank.
struct Spectrum {
  double lower = 0, upper = 0;
  bool nonzero = false, riesz = false;
};

Spectrum operator_spectrum(const std::vector<Signal>& gens, const ModulationContext& ctx) {
  std::vector<std::vector<cplx>> raw;
  for (const auto& s : gens) raw.push_back(s.values);
  auto v = oracle::orbit(ctx.group(), raw, ctx.lambda().elements());
  Eigen::MatrixXcd s = v * v.adjoint() / static_cast<double>(ctx.lambda().order());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
  const auto& ev = es.eigenvalues();
  Spectrum out;
  out.riesz = oracle::rank(v) == v.cols();
  const double top = ev.maxCoeff();
  if (top <= 0) return out;
  out.nonzero = true;
  out.upper = top;
  out.lower = top;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 1e-9 * top) out.lower = std::min(out.lower, ev(i));
  return out;
}

TEST(FrameBounds, WorkedValuesOnZ4) {
  Z4 z;
  auto one = fiber_frame_bounds({z.delta(0)}, z.ctx);
  ASSERT_EQ(one.per_fiber.size(), 1u);
  EXPECT_EQ(one.per_fiber[0].x, 0u);
  EXPECT_NEAR(one.lower, 1.0, 1e-15);
  EXPECT_NEAR(one.upper, 1.0, 1e-15);
  EXPECT_TRUE(one.is_frame);
  EXPECT_TRUE(one.is_parseval);

  auto pair = fiber_frame_bounds({z.delta(0), z.delta(2)}, z.ctx);
  EXPECT_NEAR(pair.lower, 1.0, 1e-15);
  EXPECT_NEAR(pair.upper, 1.0, 1e-15);

  auto twice = fiber_frame_bounds({z.delta(0), z.delta(0)}, z.ctx);
  EXPECT_NEAR(twice.lower, 2.0, 1e-14);
  EXPECT_NEAR(twice.upper, 2.0, 1e-14);
  EXPECT_FALSE(twice.is_parseval);
  EXPECT_FALSE(twice.is_riesz);
}

TEST(FrameBounds, OracleWorkedValueOnZ4) {
  Z4 z;
  // (1/2) sum over lambda of |<delta_0, M_lambda delta_0>|^2 = 1
  auto r = brute_force_frame_bounds({z.delta(0)}, z.ctx);
  EXPECT_NEAR(r.lower, 1.0, 1e-14);
  EXPECT_NEAR(r.upper, 1.0, 1e-14);
  EXPECT_TRUE(r.is_parseval);
  EXPECT_FALSE(r.is_riesz);
}

TEST(FrameBounds, Errors) {
  Z4 z;
  EXPECT_THROW(fiber_frame_bounds({}, z.ctx), PreconditionError);
  EXPECT_THROW(brute_force_frame_bounds({}, z.ctx), PreconditionError);
  GroupSpec big({4200});
  auto ctx = make_context(big, {});
  EXPECT_THROW(brute_force_frame_bounds({Signal::delta(big, Side::primal, 0)}, ctx), NumericalGuardError);
}

TEST(FrameBounds, ZeroGeneratorIsNotAFrame) {
  Z4 z;
  auto r = fiber_frame_bounds({Signal(z.g, Side::primal)}, z.ctx);
  EXPECT_FALSE(r.is_frame);
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_EQ(r.upper, 0.0);
  EXPECT_FALSE(brute_force_frame_bounds({Signal(z.g, Side::primal)}, z.ctx).is_frame);
}

TEST(FrameBounds, FiberAndAmbientAgree) {
  sampling::Rng rng(131);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto gens = sampling::random_generators(rng, *ctx, 4);
    if (gens.empty()) gens.push_back(sampling::random_signal(rng, g));
    auto fib = fiber_frame_bounds(gens, ctx);
    auto amb = brute_force_frame_bounds(gens, ctx);
    auto ref = operator_spectrum(gens, *ctx);
    EXPECT_EQ(fib.is_frame, ref.nonzero);
    EXPECT_EQ(amb.is_frame, ref.nonzero);
    EXPECT_EQ(fib.is_riesz, ref.riesz);
    EXPECT_EQ(amb.is_riesz, ref.riesz);
    if (!ref.nonzero) continue;
    EXPECT_NEAR(fib.lower / ref.lower, 1.0, 1e-8);
    EXPECT_NEAR(fib.upper / ref.upper, 1.0, 1e-8);
    EXPECT_NEAR(amb.lower / ref.lower, 1.0, 1e-8);
    EXPECT_NEAR(amb.upper / ref.upper, 1.0, 1e-8);
  }
}

TEST(FrameBounds, CountingMeasureScalesByLambdaOrder) {
  sampling::Rng rng(137);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    std::vector<Signal> gens{sampling::random_signal(rng, g), sampling::random_sparse_signal(rng, g, 0.3)};
    const double n = static_cast<double>(ctx->lambda().order());
    auto a = fiber_frame_bounds(gens, ctx);
    auto c = fiber_frame_bounds(gens, ctx, Measure::counting);
    auto bc = brute_force_frame_bounds(gens, ctx, Measure::counting);
    EXPECT_EQ(c.measure, Measure::counting);
    EXPECT_NEAR(c.lower / (n * a.lower), 1.0, 1e-8);
    EXPECT_NEAR(c.upper / (n * a.upper), 1.0, 1e-8);
    EXPECT_NEAR(bc.lower / c.lower, 1.0, 1e-8);
    EXPECT_NEAR(bc.upper / c.upper, 1.0, 1e-8);
  }
}

TEST(FrameBounds, BasisGeneratorsAreParseval) {
  sampling::Rng rng(139);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 4));
    if (w.dimension() == 0) continue;
    auto r = fiber_frame_bounds(basis_generators(ctx, w.range()), ctx);
    EXPECT_TRUE(r.is_parseval);
  }
}

TEST(Riesz, WorkedValuesOnZ4) {
  Z4 z;
  EXPECT_FALSE(is_riesz_basis({z.delta(0)}, z.ctx));
  // M_2 delta_0 = delta_0 and M_2 delta_1 = -delta_1: four vectors spanning two dimensions.
  EXPECT_FALSE(is_riesz_basis({z.delta(0), z.delta(1)}, z.ctx));
  EXPECT_FALSE(operator_spectrum({z.delta(0), z.delta(1)}, *z.ctx).riesz);
  EXPECT_TRUE(is_riesz_basis({}, z.ctx));
  // delta_0 + delta_1 has a unit-norm fiber at both x.
  EXPECT_TRUE(is_riesz_basis({z.delta(0) + z.delta(1)}, z.ctx));
}

TEST(Riesz, DiagnosticsAgreeWithAmbientRank) {
  sampling::Rng rng(149);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto gens = sampling::random_generators(rng, *ctx, 3);
    if (gens.empty()) continue;
    auto d = riesz_diagnostics(gens, ctx);
    EXPECT_EQ(d.per_fiber.size(), ctx->fiber_count());
    EXPECT_EQ(d.is_riesz, operator_spectrum(gens, *ctx).riesz);
  }
}

TEST(Measure, ParsesNames) {
  EXPECT_EQ(parse_measure("normalized"), Measure::normalized);
  EXPECT_EQ(parse_measure("counting"), Measure::counting);
  EXPECT_FALSE(parse_measure("lebesgue").has_value());
}

}  // namespace
