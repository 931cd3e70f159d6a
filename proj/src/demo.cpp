#include <cmath>
#include <functional>

#include "modinv/cli.hpp"

namespace modinv::cli {

namespace {

constexpr double kDemoTolerance = 1e-12;

class Scenarios {
 public:
  void number(const std::string& name, double observed, double expected, double tol = kDemoTolerance) {
    add(name, observed, expected, std::abs(observed - expected) <= tol);
  }
  void flag(const std::string& name, bool observed, bool expected) { add(name, observed, expected, observed == expected); }
  void count(const std::string& name, std::size_t observed, std::size_t expected) {
    add(name, observed, expected, observed == expected);
  }
  void values(const std::string& name, const std::vector<cplx>& observed, const std::vector<cplx>& expected) {
    bool ok = observed.size() == expected.size();
    for (std::size_t i = 0; ok && i < observed.size(); ++i) ok = std::abs(observed[i] - expected[i]) <= kDemoTolerance;
    Json o = Json::array(), e = Json::array();
    for (auto z : observed) o.push_back(to_json(z));
    for (auto z : expected) e.push_back(to_json(z));
    add(name, o, e, ok);
  }

  Json take(bool& passed) {
    passed = passed_;
    return Json{{"command", "demo"}, {"passed", passed_}, {"scenarios", std::move(list_)}};
  }

 private:
  void add(const std::string& name, Json observed, Json expected, bool ok) {
    passed_ = passed_ && ok;
    list_.push_back(Json{{"name", name}, {"observed", std::move(observed)}, {"expected", std::move(expected)}, {"pass", ok}});
  }
  Json list_ = Json::array();
  bool passed_ = true;
};

std::vector<cplx> row(const FiberMatrix& fm, Eigen::Index x) {
  std::vector<cplx> out;
  for (Eigen::Index d = 0; d < fm.entries.cols(); ++d) out.push_back(fm.entries(x, d));
  return out;
}

std::vector<cplx> dims_as_values(const RangeFunction& r) {
  std::vector<cplx> out;
  for (auto d : r.dims()) out.emplace_back(static_cast<double>(d), 0.0);
  return out;
}

}  // namespace

Json demo(bool& passed) {
  Scenarios s;
  const GroupSpec z4({4});
  const auto ctx = make_context(z4, {GroupElement{Side::dual, {2}}});
  const double r = 1.0 / std::sqrt(2.0);
  auto delta = [&](std::size_t i) { return Signal::delta(z4, Side::primal, i); };
  auto pair = [&](int x, int xi) {
    return pairing(z4, GroupElement{Side::primal, {x}}, GroupElement{Side::dual, {xi}});
  };

  s.values("pairing <1,1> on Z_4", {pair(1, 1)}, {{0, 1}});
  s.values("pairing <1,2> on Z_4", {pair(1, 2)}, {{-1, 0}});
  s.values("dft of delta_0", dft(delta(0)).values, {0.5, 0.5, 0.5, 0.5});
  s.values("dft of delta_1", dft(delta(1)).values, {{0.5, 0}, {0, -0.5}, {-0.5, 0}, {0, 0.5}});

  Signal half(z4, Side::dual, {0.5, 0.5, 0.5, 0.5});
  auto zh = zak(half, ctx);
  s.values("zak of constant 1/2, row x=0", row(zh, 0), {r, r});
  s.values("zak of constant 1/2, row x=1", row(zh, 1), {0, 0});

  auto z0 = mod_zak(delta(0), ctx);
  auto z1 = mod_zak(delta(1), ctx);
  s.values("mod_zak delta_0, row x=0", row(z0, 0), {r, r});
  s.values("mod_zak delta_0, row x=1", row(z0, 1), {0, 0});
  s.values("mod_zak delta_1, row x=0", row(z1, 0), {0, 0});
  s.values("mod_zak delta_1, row x=1", row(z1, 1), {r, {0, -r}});
  s.values("inverse_mod_zak recovers delta_0", inverse_mod_zak(z0).values, delta(0).values);

  auto w0 = ModInvariantSpace::generated_by(ctx, {delta(0)});
  auto w1 = ModInvariantSpace::generated_by(ctx, {delta(1)});
  auto w02 = ModInvariantSpace::generated_by(ctx, {delta(0), delta(2)});
  s.values("dims of M(delta_0)", dims_as_values(w0.range()), {1, 0});
  s.values("dims of M(delta_0, delta_2)", dims_as_values(w02.range()), {2, 0});
  s.flag("3.5 delta_0 in M(delta_0)", membership(cplx{3.5, 0} * delta(0), w0).member, true);
  s.flag("delta_2 in M(delta_0)", membership(delta(2), w0).member, false);
  s.number("project(delta_2, M(delta_0)) norm", project(delta(2), w0).norm(), 0.0);

  auto f0 = fiber_frame_bounds({delta(0)}, ctx);
  s.number("frame bounds {delta_0}: A", f0.lower, 1.0);
  s.number("frame bounds {delta_0}: B", f0.upper, 1.0);
  s.flag("frame bounds {delta_0}: parseval", f0.is_parseval, true);
  auto f00 = fiber_frame_bounds({delta(0), delta(0)}, ctx);
  s.number("frame bounds {delta_0, delta_0}: A", f00.lower, 2.0);
  s.number("frame bounds {delta_0, delta_0}: B", f00.upper, 2.0);
  auto oracle = brute_force_frame_bounds({delta(0)}, ctx);
  s.number("oracle bounds {delta_0}: A", oracle.lower, 1.0);
  s.flag("riesz {delta_0}", is_riesz_basis({delta(0)}, ctx), false);

  auto full = ModInvariantSpace::generated_by(ctx, {delta(0), delta(1), delta(2), delta(3)});
  s.count("decompose M(delta_0, delta_2): count", principal_decompose(w02).generators.size(), 2);
  s.count("decompose L2(Z_4): count", principal_decompose(full).generators.size(), 2);
  s.flag("decompose L2(Z_4): verified", verify_decomposition(full, principal_decompose(full)).passed(), true);

  s.number("theta(M(delta_0), M(delta_1))", mod_metric(w0, w1).theta, 1.0);
  auto scaled = ModInvariantSpace::generated_by(ctx, {cplx{1.5, 0} * delta(0)});
  s.number("theta(M(delta_0), M(1.5 delta_0))", mod_metric(w0, scaled).theta, 0.0);
  s.number("nested theta(M(delta_0), M(delta_0, delta_2))", nested_distance_check(w0, w02), 1.0, kThetaTolerance);

  auto w01 = ModInvariantSpace::generated_by(ctx, {delta(0), delta(1)});
  auto w012 = ModInvariantSpace::generated_by(ctx, {delta(0), delta(1), delta(2)});
  s.number("chain theta(W_1, W_2)", nested_distance_check(w0, w01), 1.0, kThetaTolerance);
  s.number("chain theta(W_2, W_3)", nested_distance_check(w01, w012), 1.0, kThetaTolerance);
  s.number("chain theta(W_3, W_4)", nested_distance_check(w012, full), 1.0, kThetaTolerance);

  const auto all = make_context(whole_group(z4, Side::dual));
  auto supp = space_from_support({0, 3}, all);
  s.flag("support {0,3}: delta_3 member", membership(delta(3), supp).member, true);
  s.flag("support {0,3}: delta_1 member", membership(delta(1), supp).member, false);

  return s.take(passed);
}

}  // namespace modinv::cli
