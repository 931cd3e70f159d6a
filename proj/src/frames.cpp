#include "modinv/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modinv {

const char* to_string(Measure m) { return m == Measure::normalized ? "normalized" : "counting"; }

std::optional<Measure> parse_measure(const std::string& s) {
  if (s == "normalized") return Measure::normalized;
  if (s == "counting") return Measure::counting;
  return std::nullopt;
}

namespace {

struct FiberSpectra {
  std::vector<std::vector<double>> singular;  // all singular values per fiber, descending
  double largest = 0.0;
};

FiberSpectra fiber_spectra(const std::vector<Signal>& generators, const ContextPtr& ctx) {
  std::vector<Eigen::MatrixXcd> fields;
  fields.reserve(generators.size());
  for (const auto& phi : generators) fields.push_back(mod_zak(phi, ctx).entries);

  FiberSpectra out;
  const auto dim = static_cast<Eigen::Index>(ctx->fiber_dim());
  const auto count = static_cast<Eigen::Index>(generators.size());
  for (std::size_t x = 0; x < ctx->fiber_count(); ++x) {
    Eigen::MatrixXcd m(dim, count);
    for (Eigen::Index c = 0; c < count; ++c) m.col(c) = fields[c].row(static_cast<Eigen::Index>(x)).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    std::vector<double> sv(s.data(), s.data() + s.size());
    if (!sv.empty()) out.largest = std::max(out.largest, sv.front());
    out.singular.push_back(std::move(sv));
  }
  return out;
}

void finish(FrameReport& r, bool any, double lo, double hi, double scale) {
  r.is_frame = any;
  r.lower = any ? lo * scale : 0.0;
  r.upper = any ? hi * scale : 0.0;
  r.is_parseval = any && std::abs(r.lower - 1.0) < kParsevalTolerance && std::abs(r.upper - 1.0) < kParsevalTolerance;
}

}  // namespace

FrameReport fiber_frame_bounds(const std::vector<Signal>& generators, const ContextPtr& ctx, Measure measure) {
  if (generators.empty()) throw PreconditionError("frame bounds need at least one generator");
  const auto spectra = fiber_spectra(generators, ctx);
  const double tau = kRankTolerance * spectra.largest;

  FrameReport report;
  report.measure = measure;
  report.is_riesz = true;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  bool any = false;
  for (std::size_t x = 0; x < spectra.singular.size(); ++x) {
    const auto& sv = spectra.singular[x];
    std::size_t rank = 0;
    while (rank < sv.size() && sv[rank] > tau && sv[rank] > 0.0) ++rank;
    const bool independent = rank == generators.size();
    report.is_riesz = report.is_riesz && independent;
    if (rank == 0) continue;
    FiberBounds fb{x, sv[rank - 1] * sv[rank - 1], sv[0] * sv[0], rank, independent};
    lo = std::min(lo, fb.lower);
    hi = std::max(hi, fb.upper);
    any = true;
    report.per_fiber.push_back(fb);
  }
  const double scale = measure == Measure::counting ? static_cast<double>(ctx->lambda().order()) : 1.0;
  finish(report, any, lo, hi, scale);
  return report;
}

FrameReport brute_force_frame_bounds(const std::vector<Signal>& generators, const ContextPtr& ctx, Measure measure) {
  if (generators.empty()) throw PreconditionError("frame bounds need at least one generator");
  if (ctx->group().order() > kOracleMaxOrder)
    throw NumericalGuardError("ambient oracle limited to |G| <= " + std::to_string(kOracleMaxOrder) + ", got " +
                              std::to_string(ctx->group().order()));
  const auto orbit = modulation_orbit(generators, *ctx);
  const auto sv = nonzero_singular_values(orbit);
  const double lambda_order = static_cast<double>(ctx->lambda().order());
  const double weight = measure == Measure::normalized ? 1.0 / lambda_order : 1.0;

  FrameReport report;
  report.measure = measure;
  report.is_riesz = sv.size() == static_cast<std::size_t>(orbit.cols());
  if (sv.empty()) {
    finish(report, false, 0.0, 0.0, 1.0);
    return report;
  }
  // Nonzero eigenvalues of w V V^* are w * sigma^2.
  finish(report, true, sv.back() * sv.back(), sv.front() * sv.front(), weight);
  return report;
}

RieszReport riesz_diagnostics(const std::vector<Signal>& generators, const ContextPtr& ctx) {
  RieszReport out;
  if (generators.empty()) return out;
  const auto spectra = fiber_spectra(generators, ctx);
  const double tau = kRankTolerance * spectra.largest;
  for (std::size_t x = 0; x < spectra.singular.size(); ++x) {
    const auto& sv = spectra.singular[x];
    std::size_t rank = 0;
    while (rank < sv.size() && sv[rank] > tau && sv[rank] > 0.0) ++rank;
    // Fewer fiber coordinates than generators: the missing singular values are zero.
    const double smallest = sv.size() < generators.size() ? 0.0 : sv.back();
    out.per_fiber.push_back({x, rank, generators.size(), smallest});
    if (rank != generators.size()) out.is_riesz = false;
  }
  return out;
}

bool is_riesz_basis(const std::vector<Signal>& generators, const ContextPtr& ctx) {
  return riesz_diagnostics(generators, ctx).is_riesz;
}

}  // namespace modinv
