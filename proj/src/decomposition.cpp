#include "modinv/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "modinv/frames.hpp"

namespace modinv {

PrincipalDecomposition principal_decompose(const ModInvariantSpace& w) {
  PrincipalDecomposition out;
  const auto& range = w.range();
  out.generators = basis_generators(w.context(), range);
  for (std::size_t n = 0; n < out.generators.size(); ++n) {
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < range.fiber_count(); ++x)
      if (range.dim(x) > n) support.push_back(x);
    out.supports.push_back(std::move(support));
  }
  return out;
}

DecompositionReport verify_decomposition(const ModInvariantSpace& w, const PrincipalDecomposition& dec) {
  const auto& ctx = w.context();
  const auto& g = ctx->group();
  if (g.order() > kOracleMaxOrder)
    throw NumericalGuardError("decomposition check limited to |G| <= " + std::to_string(kOracleMaxOrder));

  DecompositionReport report;
  if (!w.generators().empty()) report.ambient_dim = orthonormal_basis(modulation_orbit(w.generators(), *ctx)).cols();

  std::vector<Eigen::MatrixXcd> summands;
  for (const auto& phi : dec.generators) {
    summands.push_back(orthonormal_basis(modulation_orbit({phi}, *ctx)));
    report.summand_dim_sum += static_cast<std::size_t>(summands.back().cols());

    const auto bounds = brute_force_frame_bounds({phi}, ctx);
    const double dev = bounds.is_frame ? std::max(std::abs(bounds.lower - 1.0), std::abs(bounds.upper - 1.0)) : 1.0;
    report.parseval = std::max(report.parseval, dev);
    report.containment = std::max(report.containment, membership(phi, w).residual);
  }

  for (std::size_t m = 0; m < summands.size(); ++m) {
    for (std::size_t n = m + 1; n < summands.size(); ++n) {
      if (summands[m].cols() == 0 || summands[n].cols() == 0) continue;
      Eigen::MatrixXcd cross = summands[m].adjoint() * summands[n];
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cross);
      report.orthogonality = std::max(report.orthogonality, svd.singularValues()(0));
    }
  }

  std::vector<Signal> probes = w.generators();
  probes.insert(probes.end(), dec.generators.begin(), dec.generators.end());
  for (const auto& f : probes) {
    const double nf = f.norm();
    if (nf == 0.0) continue;
    Eigen::VectorXcd v = as_vector(f);
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(v.size());
    for (const auto& q : summands) sum += q * (q.adjoint() * v);
    report.reconstruction = std::max(report.reconstruction, (v - sum).norm() / nf);
  }
  return report;
}

}  // namespace modinv
