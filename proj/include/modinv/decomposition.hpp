#pragma once

#include <vector>

#include "modinv/fiber_spaces.hpp"

namespace modinv {

/// W as an orthogonal sum of principal spaces M^Lambda(phi_n), each with a
/// Parseval generator system.
struct PrincipalDecomposition {
  std::vector<Signal> generators;
  /// For each generator, the positions x in Pi where its fiber is nonzero.
  std::vector<std::vector<std::size_t>> supports;
};

/// phi_n is the signal whose fiber at x is the n-th column of the stored
/// orthonormal basis of J(x) (zero where dim J(x) < n). Generators come out
/// ordered by how many fibers they occupy, which is nonincreasing in n.
PrincipalDecomposition principal_decompose(const ModInvariantSpace& w);

/// Residuals of an ambient check of a decomposition.
struct DecompositionReport {
  double orthogonality = 0.0;   // max_{m != n} ||P_m P_n||
  std::size_t ambient_dim = 0;  // rank of E^Lambda(generators of W)
  std::size_t summand_dim_sum = 0;
  double parseval = 0.0;        // max_n max(|A_n - 1|, |B_n - 1|)
  double containment = 0.0;     // max_n membership residual of phi_n in W
  double reconstruction = 0.0;  // max relative ||f - sum_n P_n f|| over test members f of W

  bool dimensions_match() const { return ambient_dim == summand_dim_sum; }
  bool passed(double tol = 1e-10, double parseval_tol = 1e-8) const {
    return dimensions_match() && orthogonality < tol && parseval < parseval_tol && containment < tol &&
           reconstruction < tol;
  }
};

/// Needs |G| <= kOracleMaxOrder (dense ambient linear algebra).
DecompositionReport verify_decomposition(const ModInvariantSpace& w, const PrincipalDecomposition& dec);

}  // namespace modinv
