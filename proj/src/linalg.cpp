#include "modinv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace modinv {

Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& columns, double rel_tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return Eigen::MatrixXcd(columns.rows(), 0);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  const double cut = rel_tol * s(0);
  while (rank < s.size() && s(rank) > cut && s(rank) > 0) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::vector<double> nonzero_singular_values(const Eigen::MatrixXcd& columns, double rel_tol) {
  std::vector<double> out;
  if (columns.cols() == 0 || columns.rows() == 0) return out;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(columns);
  const auto& s = svd.singularValues();
  const double cut = rel_tol * s(0);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut && s(i) > 0) out.push_back(s(i));
  return out;
}

double hermitian_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd modulation_orbit(const std::vector<Signal>& generators, const ModulationContext& ctx) {
  const auto& lam = ctx.lambda().elements();
  const auto& g = ctx.group();
  Eigen::MatrixXcd out(g.order(), generators.size() * lam.size());
  Eigen::Index col = 0;
  for (const auto& phi : generators) {
    for (auto l : lam) {
      auto m = modulate(phi, l);
      for (std::size_t x = 0; x < g.order(); ++x) out(x, col) = m.values[x];
      ++col;
    }
  }
  return out;
}

Eigen::MatrixXcd as_columns(const std::vector<Signal>& signals, std::size_t order) {
  Eigen::MatrixXcd out(order, signals.size());
  for (std::size_t c = 0; c < signals.size(); ++c) out.col(c) = as_vector(signals[c]);
  return out;
}

Eigen::VectorXcd as_vector(const Signal& s) {
  return Eigen::Map<const Eigen::VectorXcd>(s.values.data(), static_cast<Eigen::Index>(s.values.size()));
}

Signal from_vector(const GroupSpec& g, Side side, const Eigen::VectorXcd& v) {
  return Signal(g, side, std::vector<cplx>(v.data(), v.data() + v.size()));
}

}  // namespace modinv
