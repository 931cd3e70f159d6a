#include "modinv/metric.hpp"

#include <algorithm>
#include <cmath>

namespace modinv {

namespace {

void require_shared_context(const ModInvariantSpace& v, const ModInvariantSpace& w) {
  const auto& a = *v.context();
  const auto& b = *w.context();
  if (&a == &b) return;
  if (!(a.group() == b.group()) || !(a.lambda() == b.lambda()))
    throw StructuralError("spaces live in different contexts (group or Lambda differ)");
}

}  // namespace

double fiber_distance(const RangeFunction& a, const RangeFunction& b, std::size_t x) {
  if (a.dim(x) == 0 && b.dim(x) == 0) return 0.0;
  // The eigensolver is not exactly sign-equivariant; evaluating both signs
  // makes the result bitwise symmetric in (a, b).
  const Eigen::MatrixXcd diff = a.projector(x) - b.projector(x);
  const double n = std::max(hermitian_norm(diff), hermitian_norm(-diff));
  return std::clamp(n, 0.0, 1.0);
}

MetricReport range_metric(const RangeFunction& a, const RangeFunction& b) {
  if (a.fiber_count() != b.fiber_count()) throw StructuralError("range functions over different sections");
  MetricReport r;
  r.per_fiber.reserve(a.fiber_count());
  for (std::size_t x = 0; x < a.fiber_count(); ++x) {
    const double d = fiber_distance(a, b, x);
    r.per_fiber.push_back(d);
    if (d > r.theta) {
      r.theta = d;
      r.argmax = x;
    }
  }
  return r;
}

MetricReport mod_metric(const ModInvariantSpace& v, const ModInvariantSpace& w) {
  require_shared_context(v, w);
  return range_metric(v.range(), w.range());
}

bool is_subspace(const ModInvariantSpace& v, const ModInvariantSpace& w, double tol) {
  require_shared_context(v, w);
  const auto& rv = v.range();
  const auto& rw = w.range();
  for (std::size_t x = 0; x < rv.fiber_count(); ++x)
    for (Eigen::Index c = 0; c < rv.basis(x).cols(); ++c)
      if (rw.residual(x, rv.basis(x).col(c)) > tol) return false;
  return true;
}

double nested_distance_check(const ModInvariantSpace& v, const ModInvariantSpace& w) {
  if (!is_subspace(v, w)) throw PreconditionError("nested_distance_check: V is not contained in W");
  return mod_metric(v, w).theta;
}

bool dimension_rigidity_check(const ModInvariantSpace& v, const ModInvariantSpace& w) {
  const auto r = mod_metric(v, w);
  if (r.theta >= 1.0 - 1e-9) return true;
  return v.range().dims() == w.range().dims();
}

LimitResult cauchy_limit(const std::vector<ModInvariantSpace>& seq, double tol) {
  if (seq.empty()) throw PreconditionError("cauchy_limit needs a non-empty sequence");
  if (!(tol > 0.0)) throw PreconditionError("cauchy_limit tolerance must be positive");
  for (const auto& s : seq) require_shared_context(seq.front(), s);
  const std::size_t n = seq.size();
  const auto& ctx = seq.front().context();

  // Walk the tail start backwards while the suffix diameter stays below tol.
  std::size_t start = n - 1;
  while (start > 0) {
    bool ok = true;
    for (std::size_t j = start; j < n && ok; ++j) ok = mod_metric(seq[start - 1], seq[j]).theta < tol;
    if (!ok) break;
    --start;
  }
  if (n > 1 && start == n - 1)
    throw NumericalGuardError("sequence is not Cauchy at tolerance " + std::to_string(tol) +
                              ": the last two spaces are " + std::to_string(mod_metric(seq[n - 2], seq[n - 1]).theta) +
                              " apart");

  const auto count = static_cast<double>(n - start);
  std::vector<Eigen::MatrixXcd> bases;
  for (std::size_t x = 0; x < ctx->fiber_count(); ++x) {
    const auto dim = static_cast<Eigen::Index>(ctx->fiber_dim());
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = start; i < n; ++i) avg += seq[i].range().projector(x);
    avg /= count;
    avg = (avg + avg.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(avg);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = dim - 1; k >= 0; --k)
      if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
    Eigen::MatrixXcd b(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) b.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
    bases.push_back(std::move(b));
  }

  LimitResult out{ModInvariantSpace::from_range(ctx, RangeFunction(std::move(bases))), start, {}};
  for (std::size_t i = start; i < n; ++i) out.theta_to_tail.push_back(mod_metric(seq[i], out.limit).theta);
  return out;
}

std::size_t minimal_generator_count(const ModInvariantSpace& w) { return w.range().max_dim(); }

}  // namespace modinv
