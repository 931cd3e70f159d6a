#include <algorithm>
#include <cmath>

#include "modinv/cli.hpp"
#include "modinv/sampling.hpp"

namespace modinv::cli {

namespace {

using sampling::Rng;

struct Suite {
  std::string name;
  std::size_t instances = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool flags_agree = true;

  void observe(double r) { max_residual = std::max(max_residual, r); }
  bool pass() const { return flags_agree && max_residual <= tolerance; }
  Json json() const {
    return Json{{"name", name}, {"instances", instances}, {"max_residual", max_residual},
                {"tolerance", tolerance}, {"flags_agree", flags_agree}, {"pass", pass()}};
  }
};

ContextPtr random_context(Rng& rng, std::size_t max_order) {
  auto g = sampling::random_group(rng, max_order);
  return make_context(sampling::random_lambda(rng, g));
}

Eigen::MatrixXcd fiberwise_projection(const ModInvariantSpace& w) {
  const auto& g = w.context()->group();
  Eigen::MatrixXcd p(g.order(), g.order());
  for (std::size_t y = 0; y < g.order(); ++y) p.col(y) = as_vector(project(Signal::delta(g, Side::primal, y), w));
  return p;
}

Suite transforms_suite(Rng& rng) {
  Suite s{"transform unitarity and intertwining", 100, 0, 1e-12};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 128);
    auto f = sampling::random_signal(rng, ctx->group());
    auto z = mod_zak(f, ctx);
    s.observe(std::abs(z.entries.norm() - f.norm()));
    s.observe(distance(inverse_mod_zak(z), f));
    s.observe(distance(dft(f), dft_direct(f)));
    for (auto lam : ctx->lambda().elements()) {
      auto zm = mod_zak(modulate(f, lam), ctx);
      for (std::size_t x = 0; x < ctx->fiber_count(); ++x) {
        const auto c = ctx->group().pairing_by_index(ctx->pi().representatives()[x], lam);
        const auto row = static_cast<Eigen::Index>(x);
        s.observe((zm.entries.row(row) - c * z.entries.row(row)).norm());
      }
    }
  }
  return s;
}

Suite characterization_suite(Rng& rng) {
  Suite s{"fiberwise vs ambient projection", 30, 0, 1e-9};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 32);
    auto gens = sampling::random_generators(rng, *ctx, 4);
    auto w = ModInvariantSpace::generated_by(ctx, gens);
    const auto n = static_cast<Eigen::Index>(ctx->group().order());
    Eigen::MatrixXcd ambient = Eigen::MatrixXcd::Zero(n, n);
    if (!gens.empty()) {
      auto q = orthonormal_basis(modulation_orbit(gens, *ctx));
      ambient = q * q.adjoint();
    }
    s.observe(hermitian_norm(ambient - fiberwise_projection(w)));
  }
  return s;
}

Suite frames_suite(Rng& rng) {
  Suite s{"fiber vs ambient frame bounds (relative)", 30, 0, 1e-8};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 32);
    auto gens = sampling::random_generators(rng, *ctx, 4);
    if (gens.empty()) gens.push_back(sampling::random_signal(rng, ctx->group()));
    auto a = fiber_frame_bounds(gens, ctx);
    auto b = brute_force_frame_bounds(gens, ctx);
    s.flags_agree = s.flags_agree && a.is_frame == b.is_frame && a.is_riesz == b.is_riesz;
    if (a.is_frame && b.is_frame) {
      s.observe(std::abs(a.lower - b.lower) / b.lower);
      s.observe(std::abs(a.upper - b.upper) / b.upper);
    }
  }
  return s;
}

Suite decomposition_suite(Rng& rng) {
  Suite s{"principal decomposition residuals", 20, 0, 1e-10};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 32);
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 4));
    auto r = verify_decomposition(w, principal_decompose(w));
    s.flags_agree = s.flags_agree && r.passed();
    s.observe(std::max({r.orthogonality, r.reconstruction, r.containment}));
  }
  return s;
}

Suite metric_suite(Rng& rng) {
  Suite s{"metric symmetry and triangle slack", 50, 0, 1e-12};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 32);
    auto u = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    auto v = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    auto w = ModInvariantSpace::generated_by(ctx, sampling::random_generators(rng, *ctx, 3));
    const double vw = mod_metric(v, w).theta;
    s.observe(std::abs(vw - mod_metric(w, v).theta));
    s.observe(std::max(0.0, vw - mod_metric(v, u).theta - mod_metric(u, w).theta));
    s.flags_agree = s.flags_agree && vw >= 0.0 && vw <= 1.0 && dimension_rigidity_check(v, w);
  }
  return s;
}

Suite fiberization_suite(Rng& rng) {
  Suite s{"fiberization vs mod_zak membership", 30, 0, 0};
  for (std::size_t i = 0; i < s.instances; ++i) {
    auto ctx = random_context(rng, 32);
    auto gens = sampling::random_generators(rng, *ctx, 4);
    auto w = ModInvariantSpace::generated_by(ctx, gens);
    auto t = fiberization_range(gens, ctx);
    for (std::size_t x = 0; x < ctx->fiber_count(); ++x)
      s.flags_agree = s.flags_agree && t.dim(x) == w.range().dim(ctx->opposite_fiber(x));
    for (int k = 0; k < 10; ++k) {
      auto f = sampling::random_signal(rng, ctx->group());
      if (k % 2 == 0) f = project(f, w);
      s.flags_agree = s.flags_agree && membership(f, w).member == fiberization_membership(f, t, ctx).member;
    }
  }
  return s;
}

}  // namespace

Json selftest(std::uint64_t seed, bool& passed) {
  Rng rng(seed);
  std::vector<Suite> suites;
  suites.push_back(transforms_suite(rng));
  suites.push_back(characterization_suite(rng));
  suites.push_back(frames_suite(rng));
  suites.push_back(decomposition_suite(rng));
  suites.push_back(metric_suite(rng));
  suites.push_back(fiberization_suite(rng));
  passed = std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.pass(); });
  Json list = Json::array();
  for (const auto& s : suites) list.push_back(s.json());
  return Json{{"command", "selftest"}, {"seed", seed}, {"passed", passed}, {"suites", std::move(list)}};
}

}  // namespace modinv::cli
