#include "modinv/fiber_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace modinv {

RangeFunction::RangeFunction(std::vector<Eigen::MatrixXcd> bases) : bases_(std::move(bases)) {}

std::vector<std::size_t> RangeFunction::dims() const {
  std::vector<std::size_t> out;
  out.reserve(bases_.size());
  for (std::size_t x = 0; x < bases_.size(); ++x) out.push_back(dim(x));
  return out;
}

std::size_t RangeFunction::total_dim() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < bases_.size(); ++x) n += dim(x);
  return n;
}

std::size_t RangeFunction::max_dim() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < bases_.size(); ++x) n = std::max(n, dim(x));
  return n;
}

Eigen::MatrixXcd RangeFunction::projector(std::size_t x) const {
  const auto& b = bases_[x];
  return b * b.adjoint();
}

Eigen::VectorXcd RangeFunction::project_fiber(std::size_t x, const Eigen::VectorXcd& v) const {
  const auto& b = bases_[x];
  if (b.cols() == 0) return Eigen::VectorXcd::Zero(v.size());
  return b * (b.adjoint() * v);
}

double RangeFunction::residual(std::size_t x, const Eigen::VectorXcd& v) const {
  return (v - project_fiber(x, v)).norm();
}

double RangeFunction::max_residual(const Eigen::MatrixXcd& field) const {
  double worst = 0.0;
  for (std::size_t x = 0; x < bases_.size(); ++x)
    worst = std::max(worst, residual(x, field.row(static_cast<Eigen::Index>(x)).transpose()));
  return worst;
}

RangeFunction span_fibers(const std::vector<Eigen::MatrixXcd>& fields, double rel_tol) {
  if (fields.empty()) return {};
  const Eigen::Index rows = fields.front().rows();
  const Eigen::Index dim = fields.front().cols();
  double largest = 0.0;
  for (const auto& f : fields) {
    if (f.rows() != rows || f.cols() != dim) throw StructuralError("fiber fields differ in shape");
    for (Eigen::Index x = 0; x < rows; ++x) largest = std::max(largest, f.row(x).norm());
  }
  const double tau = rel_tol * largest;

  std::vector<Eigen::MatrixXcd> bases;
  bases.reserve(rows);
  std::vector<Eigen::VectorXcd> q;
  for (Eigen::Index x = 0; x < rows; ++x) {
    q.clear();
    for (const auto& f : fields) {
      Eigen::VectorXcd w = f.row(x).transpose();
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : q) w -= e * e.dot(w);
      const double n = w.norm();
      if (n > tau && n > 0.0) q.push_back(w / n);
    }
    Eigen::MatrixXcd b(dim, static_cast<Eigen::Index>(q.size()));
    for (std::size_t c = 0; c < q.size(); ++c) b.col(static_cast<Eigen::Index>(c)) = q[c];
    bases.push_back(std::move(b));
  }
  return RangeFunction(std::move(bases));
}

namespace {

RangeFunction empty_range(const ModulationContext& ctx) {
  return RangeFunction(std::vector<Eigen::MatrixXcd>(
      ctx.fiber_count(), Eigen::MatrixXcd(static_cast<Eigen::Index>(ctx.fiber_dim()), 0)));
}

void require_on_context(const Signal& f, const ModulationContext& ctx) {
  if (!(f.group == ctx.group()) || f.side != Side::primal)
    throw StructuralError("signal does not live on G of the context (" + ctx.group().describe() + ")");
}

}  // namespace

RangeFunction range_function_from_generators(const std::vector<Signal>& generators, const ContextPtr& ctx) {
  if (generators.empty()) return empty_range(*ctx);
  std::vector<Eigen::MatrixXcd> fields;
  fields.reserve(generators.size());
  for (const auto& phi : generators) fields.push_back(mod_zak(phi, ctx).entries);
  return span_fibers(fields);
}

ModInvariantSpace::ModInvariantSpace(ContextPtr ctx, std::vector<Signal> generators, RangeFunction range)
    : ctx_(std::move(ctx)), generators_(std::move(generators)), range_(std::move(range)) {}

ModInvariantSpace ModInvariantSpace::generated_by(ContextPtr ctx, std::vector<Signal> generators) {
  for (const auto& g : generators) require_on_context(g, *ctx);
  auto range = range_function_from_generators(generators, ctx);
  return ModInvariantSpace(std::move(ctx), std::move(generators), std::move(range));
}

ModInvariantSpace ModInvariantSpace::from_range(ContextPtr ctx, const RangeFunction& range) {
  if (range.fiber_count() != ctx->fiber_count()) throw StructuralError("range function does not match Pi");
  return generated_by(ctx, basis_generators(ctx, range));
}

std::vector<Signal> basis_generators(const ContextPtr& ctx, const RangeFunction& range) {
  std::vector<Signal> out;
  const auto rows = static_cast<Eigen::Index>(ctx->fiber_count());
  const auto cols = static_cast<Eigen::Index>(ctx->fiber_dim());
  for (std::size_t n = 0; n < range.max_dim(); ++n) {
    FiberMatrix fm{ctx, Eigen::MatrixXcd::Zero(rows, cols)};
    for (std::size_t x = 0; x < range.fiber_count(); ++x)
      if (range.dim(x) > n)
        fm.entries.row(static_cast<Eigen::Index>(x)) = range.basis(x).col(static_cast<Eigen::Index>(n)).transpose();
    out.push_back(inverse_mod_zak(fm));
  }
  return out;
}

MembershipResult membership(const Signal& f, const ModInvariantSpace& w, double rel_tol) {
  require_on_context(f, *w.context());
  const double r = w.range().max_residual(mod_zak(f, w.context()).entries);
  return {r <= rel_tol * f.norm(), r};
}

Signal project(const Signal& f, const ModInvariantSpace& w) {
  require_on_context(f, *w.context());
  auto fm = mod_zak(f, w.context());
  for (std::size_t x = 0; x < w.range().fiber_count(); ++x) {
    const auto row = static_cast<Eigen::Index>(x);
    fm.entries.row(row) = w.range().project_fiber(x, fm.entries.row(row).transpose()).transpose();
  }
  return inverse_mod_zak(fm);
}

ModInvariantSpace space_from_support(const std::vector<std::size_t>& support, const ContextPtr& ctx) {
  const auto& g = ctx->group();
  if (ctx->lambda().order() != g.order())
    throw PreconditionError("space_from_support needs Lambda to be the whole dual group");
  std::set<std::size_t> points(support.begin(), support.end());
  std::vector<Signal> gens;
  for (auto y : points) {
    if (y >= g.order()) throw StructuralError("support point outside the group");
    gens.push_back(Signal::delta(g, Side::primal, y));
  }
  return ModInvariantSpace::generated_by(ctx, std::move(gens));
}

bool is_modulation_invariant(const std::vector<Signal>& spanning_set, const Subgroup& lambda, double rel_tol) {
  if (spanning_set.empty()) return true;
  const auto& g = lambda.parent();
  if (lambda.side() != Side::dual) throw StructuralError("Lambda must be a subgroup of the dual group");
  double scale = 0.0;
  for (const auto& v : spanning_set) {
    if (!(v.group == g) || v.side != Side::primal) throw StructuralError("spanning set not on G");
    scale = std::max(scale, v.norm());
  }
  if (scale == 0.0) return true;
  auto basis = orthonormal_basis(as_columns(spanning_set, g.order()), rel_tol);
  for (const auto& v : spanning_set) {
    for (auto l : lambda.elements()) {
      Eigen::VectorXcd m = as_vector(modulate(v, l));
      Eigen::VectorXcd r = m - basis * (basis.adjoint() * m);
      if (r.norm() > rel_tol * scale) return false;
    }
  }
  return true;
}

RangeFunction fiberization_range(const std::vector<Signal>& generators, const ContextPtr& ctx) {
  if (generators.empty())
    return RangeFunction(std::vector<Eigen::MatrixXcd>(
        ctx->fiber_count(), Eigen::MatrixXcd(static_cast<Eigen::Index>(ctx->lambda_star().order()), 0)));
  std::vector<Eigen::MatrixXcd> fields;
  for (const auto& phi : generators) {
    require_on_context(phi, *ctx);
    fields.push_back(fiberization(phi, ctx).entries);
  }
  return span_fibers(fields);
}

MembershipResult fiberization_membership(const Signal& f, const RangeFunction& range, const ContextPtr& ctx,
                                         double rel_tol) {
  require_on_context(f, *ctx);
  const double r = range.max_residual(fiberization(f, ctx).entries);
  return {r <= rel_tol * f.norm(), r};
}

}  // namespace modinv
