#pragma once

#include <vector>

#include <Eigen/Dense>

#include "modinv/transforms.hpp"

namespace modinv {

/// Relative rank cutoff shared by every rank decision in the library.
inline constexpr double kRankTolerance = 1e-9;

/// Orthonormal basis of the column span via SVD; singular values at or
/// below rel_tol * (largest singular value) are treated as zero.
Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& columns, double rel_tol = kRankTolerance);

/// Ambient span as a rank plus singular values, same cutoff as above.
std::vector<double> nonzero_singular_values(const Eigen::MatrixXcd& columns, double rel_tol = kRankTolerance);

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_norm(const Eigen::MatrixXcd& m);

/// Columns M_lambda phi for phi in generators (outer), lambda in Lambda (inner).
Eigen::MatrixXcd modulation_orbit(const std::vector<Signal>& generators, const ModulationContext& ctx);

/// Signals as columns of a |G| x n matrix.
Eigen::MatrixXcd as_columns(const std::vector<Signal>& signals, std::size_t order);
Eigen::VectorXcd as_vector(const Signal& s);
Signal from_vector(const GroupSpec& g, Side side, const Eigen::VectorXcd& v);

}  // namespace modinv
