#pragma once

#include <vector>

#include <Eigen/Dense>

#include "modinv/linalg.hpp"
#include "modinv/transforms.hpp"

namespace modinv {

/// Membership threshold, relative to the norm of the tested signal.
inline constexpr double kMembershipTolerance = 1e-9;

/**
 * A range function over Pi: for each fiber x an orthonormal basis (as
 * columns) of a subspace J(x) of the fiber space. A basis may have zero
 * columns.
 */
class RangeFunction {
 public:
  RangeFunction() = default;
  explicit RangeFunction(std::vector<Eigen::MatrixXcd> bases);

  std::size_t fiber_count() const { return bases_.size(); }
  const Eigen::MatrixXcd& basis(std::size_t x) const { return bases_[x]; }
  const std::vector<Eigen::MatrixXcd>& bases() const { return bases_; }

  std::size_t dim(std::size_t x) const { return static_cast<std::size_t>(bases_[x].cols()); }
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const;
  std::size_t max_dim() const;

  Eigen::MatrixXcd projector(std::size_t x) const;
  Eigen::VectorXcd project_fiber(std::size_t x, const Eigen::VectorXcd& v) const;
  /// || (I - P_J(x)) v ||
  double residual(std::size_t x, const Eigen::VectorXcd& v) const;
  /// Largest residual over all rows of a fiber field.
  double max_residual(const Eigen::MatrixXcd& field) const;

 private:
  std::vector<Eigen::MatrixXcd> bases_;
};

/**
 * Fiberwise span of several fiber fields (each |Pi| x m, fibers as rows).
 *
 * Modified Gram-Schmidt with one reorthogonalization pass, processing the
 * fields in order. A vector is kept when its residual exceeds
 * rel_tol * (largest fiber vector norm over all x and all fields).
 */
RangeFunction span_fibers(const std::vector<Eigen::MatrixXcd>& fields, double rel_tol = kRankTolerance);

RangeFunction range_function_from_generators(const std::vector<Signal>& generators, const ContextPtr& ctx);

/// M^Lambda(A): the smallest Lambda-modulation invariant space containing A.
class ModInvariantSpace {
 public:
  static ModInvariantSpace generated_by(ContextPtr ctx, std::vector<Signal> generators);
  /// The space whose fibers are the given range function; generators are the
  /// fiberwise basis signals (see basis_generators).
  static ModInvariantSpace from_range(ContextPtr ctx, const RangeFunction& range);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Signal>& generators() const { return generators_; }
  const RangeFunction& range() const { return range_; }
  std::size_t dimension() const { return range_.total_dim(); }

 private:
  ModInvariantSpace(ContextPtr ctx, std::vector<Signal> generators, RangeFunction range);

  ContextPtr ctx_;
  std::vector<Signal> generators_;
  RangeFunction range_;
};

/// Signals phi_n with mod_zak(phi_n)(x) equal to the n-th basis column of
/// J(x) where dim J(x) >= n and zero elsewhere; n runs to max_dim().
std::vector<Signal> basis_generators(const ContextPtr& ctx, const RangeFunction& range);

struct MembershipResult {
  bool member = false;
  double residual = 0.0;  // max_x ||(I - P_J(x)) Zf(x)||
};

MembershipResult membership(const Signal& f, const ModInvariantSpace& w, double rel_tol = kMembershipTolerance);

/// Orthogonal projection onto W, applied fiber by fiber.
Signal project(const Signal& f, const ModInvariantSpace& w);

/// With Lambda the whole dual: the space of signals supported in `support`
/// (element indices of G).
ModInvariantSpace space_from_support(const std::vector<std::size_t>& support, const ContextPtr& ctx);

/// Ambient test: M_lambda v stays in span(S) for every v in S and lambda in Lambda.
bool is_modulation_invariant(const std::vector<Signal>& spanning_set, const Subgroup& lambda,
                             double rel_tol = kRankTolerance);

/// Range function built from the fiberization map instead of mod_zak.
RangeFunction fiberization_range(const std::vector<Signal>& generators, const ContextPtr& ctx);
MembershipResult fiberization_membership(const Signal& f, const RangeFunction& range, const ContextPtr& ctx,
                                         double rel_tol = kMembershipTolerance);

}  // namespace modinv
