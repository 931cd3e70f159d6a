#pragma once

#include <vector>

#include "modinv/fiber_spaces.hpp"

namespace modinv {

/// Fiber distances equal to 1 within this slack count as "distance one".
inline constexpr double kThetaTolerance = 1e-10;

struct MetricReport {
  double theta = 0.0;
  std::vector<double> per_fiber;  // ||P_V(x) - P_W(x)|| for each x in Pi
  std::size_t argmax = 0;         // first x attaining theta
};

/// ||P_a(x) - P_b(x)|| in operator norm, clamped to [0, 1].
double fiber_distance(const RangeFunction& a, const RangeFunction& b, std::size_t x);
MetricReport range_metric(const RangeFunction& a, const RangeFunction& b);

/// theta(V, W): the largest fiberwise operator-norm distance between the
/// range-function projections. V and W must share G and Lambda.
MetricReport mod_metric(const ModInvariantSpace& v, const ModInvariantSpace& w);

/// J_V(x) contained in J_W(x) for every x (basis residuals below rel_tol).
bool is_subspace(const ModInvariantSpace& v, const ModInvariantSpace& w, double tol = kRankTolerance);

/// theta(V, W) for V inside W; throws PreconditionError when V is not a subspace of W.
double nested_distance_check(const ModInvariantSpace& v, const ModInvariantSpace& w);

/// True iff theta(V, W) < 1 - 1e-9 implies equal fiber dimensions everywhere.
bool dimension_rigidity_check(const ModInvariantSpace& v, const ModInvariantSpace& w);

struct LimitResult {
  ModInvariantSpace limit;
  std::size_t tail_start = 0;         // first index of the averaged tail
  std::vector<double> theta_to_tail;  // theta(seq[n], limit) for n >= tail_start
};

/**
 * Limit of a finite Cauchy sequence. The tail is the longest suffix of
 * θ-diameter below tol; it must hold at least two spaces unless the
 * sequence has a single element. Per fiber, the tail projections are
 * averaged and rounded to a projection by keeping eigenvectors with
 * eigenvalue above 1/2. Throws NumericalGuardError when no such tail exists.
 */
LimitResult cauchy_limit(const std::vector<ModInvariantSpace>& seq, double tol);

/// max_x dim J(x); the number of principal summands of W.
std::size_t minimal_generator_count(const ModInvariantSpace& w);

}  // namespace modinv
