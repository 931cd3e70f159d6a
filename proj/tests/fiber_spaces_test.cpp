#include <gtest/gtest.h>

#include <cmath>

#include "modinv/fiber_spaces.hpp"
#include "modinv/linalg.hpp"
#include "modinv/sampling.hpp"
#include "oracles.hpp"

namespace {

using namespace modinv;

const double r2 = 1.0 / std::sqrt(2.0);

struct Z4 {
  GroupSpec g{{4}};
  ContextPtr ctx = make_context(g, {{Side::dual, {2}}});
  Signal delta(std::size_t i) const { return Signal::delta(g, Side::primal, i); }
};

Eigen::MatrixXcd ambient_projection(const ModInvariantSpace& w) {
  const auto& g = w.context()->group();
  std::vector<std::vector<cplx>> gens;
  for (const auto& s : w.generators()) gens.push_back(s.values);
  return oracle::projection(oracle::orbit(g, gens, w.context()->lambda().elements()));
}

Eigen::MatrixXcd fiberwise_projection(const ModInvariantSpace& w) {
  const auto& g = w.context()->group();
  Eigen::MatrixXcd p(g.order(), g.order());
  for (std::size_t y = 0; y < g.order(); ++y) p.col(y) = as_vector(project(Signal::delta(g, Side::primal, y), w));
  return p;
}

TEST(RangeFunction, WorkedValuesOnZ4) {
  Z4 z;
  auto w0 = ModInvariantSpace::generated_by(z.ctx, {z.delta(0)});
  EXPECT_EQ(w0.range().dims(), (std::vector<std::size_t>{1, 0}));
  Eigen::VectorXcd e(2);
  e << r2, r2;
  EXPECT_LT((w0.range().projector(0) - e * e.adjoint()).norm(), 1e-15);

  auto w02 = ModInvariantSpace::generated_by(z.ctx, {z.delta(0), z.delta(2)});
  EXPECT_EQ(w02.range().dims(), (std::vector<std::size_t>{2, 0}));
  EXPECT_LT((w02.range().projector(0) - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-15);

  auto empty = ModInvariantSpace::generated_by(z.ctx, {});
  EXPECT_EQ(empty.range().dims(), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(empty.dimension(), 0u);
}

TEST(RangeFunction, BasesAreOrthonormal) {
  sampling::Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 5));
    for (std::size_t x = 0; x < w.range().fiber_count(); ++x) {
      const auto& b = w.range().basis(x);
      EXPECT_LE(w.range().dim(x), ctx->fiber_dim());
      EXPECT_LT((b.adjoint() * b - Eigen::MatrixXcd::Identity(b.cols(), b.cols())).norm(), 1e-10);
    }
  }
}

TEST(RangeFunction, TotalDimensionIsAmbientRank) {
  sampling::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto gens = sampling::random_generators(rng, *ctx, 5);
    auto w = ModInvariantSpace::generated_by(ctx, gens);
    std::vector<std::vector<cplx>> raw;
    for (const auto& s : gens) raw.push_back(s.values);
    auto v = oracle::orbit(g, raw, ctx->lambda().elements());
    EXPECT_EQ(static_cast<Eigen::Index>(w.dimension()), oracle::rank(v));
  }
}

TEST(SpanFibers, RejectsMismatchedShapes) {
  EXPECT_THROW(span_fibers({Eigen::MatrixXcd::Zero(2, 2), Eigen::MatrixXcd::Zero(2, 3)}), StructuralError);
}

TEST(Membership, WorkedValuesOnZ4) {
  Z4 z;
  auto w = ModInvariantSpace::generated_by(z.ctx, {z.delta(0)});
  EXPECT_TRUE(membership(cplx(-3.5, 2.0) * z.delta(0), w).member);
  EXPECT_FALSE(membership(z.delta(2), w).member);
  EXPECT_TRUE(membership(Signal(z.g, Side::primal), w).member);
  EXPECT_LT(project(z.delta(2), w).norm(), 1e-15);
  EXPECT_LT(distance(project(z.delta(0), w), z.delta(0)), 1e-15);
}

TEST(Membership, ClosedUnderModulation) {
  sampling::Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    auto f = project(sampling::random_signal(rng, g), w);
    ASSERT_TRUE(membership(f, w).member);
    for (auto lam : ctx->lambda().elements()) EXPECT_TRUE(membership(modulate(f, lam), w).member);
  }
}

TEST(Membership, MultiplicativeInvariance) {
  sampling::Rng rng(83);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    auto f = project(sampling::random_signal(rng, g), w);
    auto fm = mod_zak(f, ctx);
    for (Eigen::Index x = 0; x < fm.entries.rows(); ++x) fm.entries.row(x) *= cplx(n01(rng), n01(rng));
    EXPECT_TRUE(membership(inverse_mod_zak(fm), w).member);
  }
}

TEST(Project, IdempotentAndContractive) {
  sampling::Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    auto f = sampling::random_signal(rng, g);
    auto p = project(f, w);
    EXPECT_LE(p.norm(), f.norm() + 1e-12);
    EXPECT_LT(distance(project(p, w), p), 1e-12);
    auto r = f - p;
    EXPECT_LT(project(r, w).norm(), 1e-12);
  }
}

TEST(Characterization, FiberwiseEqualsAmbientProjection) {
  sampling::Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = sampling::random_group(rng, 48);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 4));
    EXPECT_LT(oracle::op_norm(ambient_projection(w) - fiberwise_projection(w)), 1e-9);
  }
}

TEST(Characterization, EqualRangeFunctionsGiveEqualSpaces) {
  sampling::Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = sampling::random_group(rng, 48);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 4));
    auto rebuilt = ModInvariantSpace::from_range(ctx, w.range());
    EXPECT_EQ(rebuilt.range().dims(), w.range().dims());
    EXPECT_LT(oracle::op_norm(fiberwise_projection(w) - fiberwise_projection(rebuilt)), 1e-10);
  }
}

TEST(SpaceFromSupport, WorkedValues) {
  GroupSpec z4({4});
  auto full = make_context(whole_group(z4, Side::dual));
  auto w = space_from_support({0, 3}, full);
  EXPECT_TRUE(membership(Signal::delta(z4, Side::primal, 3), w).member);
  EXPECT_FALSE(membership(Signal::delta(z4, Side::primal, 1), w).member);
  EXPECT_EQ(space_from_support({}, full).dimension(), 0u);
  EXPECT_THROW(space_from_support({0}, make_context(z4, {{Side::dual, {2}}})), PreconditionError);
}

TEST(SpaceFromSupport, RandomSupportedSignals) {
  sampling::Rng rng(103);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(whole_group(g, Side::dual));
    std::vector<std::size_t> support;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (coin(rng)) support.push_back(y);
    auto w = space_from_support(support, ctx);
    EXPECT_EQ(w.dimension(), support.size());
    auto f = sampling::random_signal(rng, g);
    std::vector<bool> in(g.order(), false);
    for (auto y : support) in[y] = true;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!in[y]) f.values[y] = 0;
    EXPECT_TRUE(membership(f, w).member);
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (in[y]) continue;
      auto h = f;
      h.values[y] = 1.0;
      EXPECT_FALSE(membership(h, w).member);
    }
  }
}

TEST(InvarianceCheck, WorkedValues) {
  GroupSpec z4({4});
  auto full = whole_group(z4, Side::dual);
  auto s = Signal::delta(z4, Side::primal, 0) + Signal::delta(z4, Side::primal, 1);
  EXPECT_FALSE(is_modulation_invariant({s}, full));
  EXPECT_TRUE(is_modulation_invariant({}, full));
  EXPECT_TRUE(is_modulation_invariant({Signal(z4, Side::primal)}, full));
  std::vector<Signal> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(Signal::delta(z4, Side::primal, i));
  EXPECT_TRUE(is_modulation_invariant(basis, full));
}

TEST(InvarianceCheck, OrbitSpansAreInvariant) {
  sampling::Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto gens = sampling::random_generators(rng, *ctx, 3);
    std::vector<Signal> orbit;
    for (const auto& phi : gens)
      for (auto l : ctx->lambda().elements()) orbit.push_back(modulate(phi, l));
    EXPECT_TRUE(is_modulation_invariant(orbit, ctx->lambda()));
  }
}

TEST(Fiberization, RangeAndMembershipAgreeWithModZak) {
  sampling::Rng rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = sampling::random_group(rng, 64);
    auto ctx = make_context(sampling::random_lambda(rng, g));
    auto gens = sampling::random_generators(rng, *ctx, 4);
    auto w = ModInvariantSpace::generated_by(ctx, gens);
    auto t = fiberization_range(gens, ctx);
    for (std::size_t x = 0; x < ctx->fiber_count(); ++x) EXPECT_EQ(t.dim(x), w.range().dim(ctx->opposite_fiber(x)));
    for (int k = 0; k < 10; ++k) {
      auto f = sampling::random_signal(rng, g);
      if (k % 2 == 0) f = project(f, w);
      EXPECT_EQ(membership(f, w).member, fiberization_membership(f, t, ctx).member);
    }
  }
}

TEST(ModInvariantSpace, RejectsForeignGenerators) {
  Z4 z;
  GroupSpec z2({2});
  EXPECT_THROW(ModInvariantSpace::generated_by(z.ctx, {Signal::delta(z2, Side::primal, 0)}), StructuralError);
  EXPECT_THROW(ModInvariantSpace::generated_by(z.ctx, {Signal::delta(z.g, Side::dual, 0)}), StructuralError);
}

}  // namespace
