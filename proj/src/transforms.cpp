#include "modinv/transforms.hpp"

#include <cmath>
#include <string>

namespace modinv {

Signal::Signal(GroupSpec g, Side s) : group(std::move(g)), side(s), values(group.order(), cplx{}) {}

Signal::Signal(GroupSpec g, Side s, std::vector<cplx> v) : group(std::move(g)), side(s), values(std::move(v)) {
  if (values.size() != group.order())
    throw StructuralError("signal has " + std::to_string(values.size()) + " samples, group " +
                          group.describe() + " has order " + std::to_string(group.order()));
}

Signal Signal::delta(const GroupSpec& g, Side s, std::size_t index) {
  Signal out(g, s);
  out.values.at(index) = 1.0;
  return out;
}

double Signal::norm() const {
  double acc = 0;
  for (const auto& v : values) acc += std::norm(v);
  return std::sqrt(acc);
}

namespace {
void require_same_space(const Signal& a, const Signal& b) {
  if (!(a.group == b.group) || a.side != b.side)
    throw StructuralError("signals live on different groups or sides");
}
}  // namespace

Signal& Signal::operator+=(const Signal& o) {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

Signal& Signal::operator-=(const Signal& o) {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

Signal& Signal::operator*=(cplx c) {
  for (auto& v : values) v *= c;
  return *this;
}

Signal operator+(Signal a, const Signal& b) { return a += b; }
Signal operator-(Signal a, const Signal& b) { return a -= b; }
Signal operator*(cplx c, Signal a) { return a *= c; }
double distance(const Signal& a, const Signal& b) { return (a - b).norm(); }

Signal modulate(const Signal& f, std::size_t lambda) {
  if (f.side != Side::primal) throw StructuralError("modulation acts on signals on G");
  Signal out = f;
  for (std::size_t x = 0; x < f.values.size(); ++x) out.values[x] *= f.group.pairing_by_index(x, lambda);
  return out;
}

Signal translate(const Signal& g, std::size_t mu) {
  Signal out(g.group, g.side);
  for (std::size_t xi = 0; xi < g.values.size(); ++xi)
    out.values[g.group.add(xi, mu)] = g.values[xi];
  return out;
}

ModulationContext::ModulationContext(Subgroup lambda, Section pi, Section d)
    : lambda_(std::move(lambda)), pi_(std::move(pi)), d_(std::move(d)) {
  if (lambda_.side() != Side::dual) throw StructuralError("Lambda must be a subgroup of the dual group");
  if (pi_.side() != Side::primal || !(pi_.parent() == lambda_.parent()))
    throw StructuralError("Pi must be a section of G");
  if (d_.side() != Side::dual || !(d_.parent() == lambda_.parent()))
    throw StructuralError("D must be a section of the dual group");
  if (!(d_.subgroup() == lambda_)) throw StructuralError("D is not a section for dual / Lambda");
  if (!(pi_.subgroup() == annihilator(lambda_)))
    throw StructuralError("Pi is not a section for G / Lambda*");
  if (pi_.size() * lambda_.order() <= (std::size_t{1} << 20)) {
    auto chars = std::make_shared<Eigen::MatrixXcd>();
    characters(*chars);
    chars_ = std::move(chars);
  }
}

const Eigen::MatrixXcd& ModulationContext::characters(Eigen::MatrixXcd& scratch) const {
  if (chars_) return *chars_;
  const auto& grp = group();
  const auto& lam = lambda_.elements();
  const auto& pi = pi_.representatives();
  const auto roots = grp.roots();
  scratch.resize(static_cast<Eigen::Index>(pi.size()), static_cast<Eigen::Index>(lam.size()));
  for (std::size_t l = 0; l < lam.size(); ++l)
    for (std::size_t x = 0; x < pi.size(); ++x) scratch(x, l) = roots[grp.phase(pi[x], lam[l])];
  return scratch;
}

std::size_t ModulationContext::opposite_fiber(std::size_t x) const {
  return pi_.coset_index(group().negate(pi_.representatives()[x]));
}

ContextPtr make_context(const Subgroup& lambda) {
  auto star = annihilator(lambda);
  return std::make_shared<const ModulationContext>(lambda, make_section(star), make_section(lambda));
}

ContextPtr make_context(const GroupSpec& g, std::vector<GroupElement> lambda_generators) {
  return make_context(subgroup_from_generators(g, Side::dual, std::move(lambda_generators)));
}

namespace {

// One-dimensional DFT along factor `axis`, sign -1 for the forward kernel.
// Each block of n * stride samples is a stride x n column-major matrix whose
// rows are the lines along the axis; the kernel matrix is symmetric.
void transform_axis(const GroupSpec& g, std::vector<cplx>& data, std::size_t axis, int sign) {
  const int n = g.factors()[axis];
  std::size_t stride = 1;
  for (std::size_t j = axis + 1; j < g.rank(); ++j) stride *= static_cast<std::size_t>(g.factors()[j]);
  const std::size_t block = stride * static_cast<std::size_t>(n);
  const int weight = g.exponent() / n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const auto roots = g.roots();
  Eigen::MatrixXcd kernel(n, n);
  for (int k = 0; k < n; ++k) {
    int p = 0;
    for (int t = 0; t < n; ++t) {
      kernel(k, t) = roots[(sign > 0 || p == 0 ? p : n - p) * weight] * scale;
      p += k;
      if (p >= n) p -= n;
    }
  }
  const auto rows = static_cast<Eigen::Index>(stride);
  Eigen::MatrixXcd out(rows, n);
  for (std::size_t base = 0; base < data.size(); base += block) {
    Eigen::Map<Eigen::MatrixXcd> lines(data.data() + base, rows, n);
    out.noalias() = lines * kernel;
    lines = out;
  }
}

Signal separable_dft(const Signal& f, int sign) {
  Signal out(f.group, opposite(f.side), f.values);
  for (std::size_t axis = 0; axis < f.group.rank(); ++axis) transform_axis(f.group, out.values, axis, sign);
  return out;
}

}  // namespace

Signal dft(const Signal& f) { return separable_dft(f, -1); }
Signal inverse_dft(const Signal& h) { return separable_dft(h, +1); }

Signal dft_direct(const Signal& f) {
  const auto& g = f.group;
  Signal out(g, opposite(f.side));
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    cplx acc{};
    for (std::size_t x = 0; x < g.order(); ++x) acc += f.values[x] * std::conj(g.pairing_by_index(x, xi));
    out.values[xi] = acc * scale;
  }
  return out;
}

namespace {
void require_context_group(const Signal& s, const ModulationContext& ctx, Side side) {
  if (!(s.group == ctx.group()))
    throw StructuralError("signal on " + s.group.describe() + " used with context on " +
                          ctx.group().describe());
  if (s.side != side) throw StructuralError(std::string("expected a signal on the ") + to_string(side) + " side");
}

void require_shape(const Eigen::MatrixXcd& m, const ModulationContext& ctx) {
  if (static_cast<std::size_t>(m.rows()) != ctx.fiber_count() ||
      static_cast<std::size_t>(m.cols()) != ctx.fiber_dim())
    throw StructuralError("fiber matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", sections require " + std::to_string(ctx.fiber_count()) + "x" +
                          std::to_string(ctx.fiber_dim()));
}
}  // namespace

FiberMatrix zak(const Signal& g, const ContextPtr& ctx) {
  require_context_group(g, *ctx, Side::dual);
  const auto& grp = ctx->group();
  const auto& lam = ctx->lambda().elements();
  const auto& dreps = ctx->d().representatives();
  const double scale = 1.0 / std::sqrt(static_cast<double>(lam.size()));

  // samples(l, d) = g(d + lambda_l)
  Eigen::MatrixXcd samples(lam.size(), dreps.size());
  for (std::size_t d = 0; d < dreps.size(); ++d)
    for (std::size_t l = 0; l < lam.size(); ++l) samples(l, d) = g.values[grp.add(dreps[d], lam[l])];
  Eigen::MatrixXcd scratch;
  FiberMatrix out{ctx, Eigen::MatrixXcd()};
  out.entries.noalias() = ctx->characters(scratch) * samples;
  out.entries *= scale;
  return out;
}

Signal inverse_zak(const FiberMatrix& fm) {
  const auto& ctx = *fm.context;
  require_shape(fm.entries, ctx);
  const auto& grp = ctx.group();
  const auto& lam = ctx.lambda().elements();
  const auto& dreps = ctx.d().representatives();
  const double scale = 1.0 / std::sqrt(static_cast<double>(lam.size()));

  Eigen::MatrixXcd scratch;
  Eigen::MatrixXcd samples;
  samples.noalias() = ctx.characters(scratch).adjoint() * fm.entries;
  Signal out(grp, Side::dual);
  for (std::size_t d = 0; d < dreps.size(); ++d)
    for (std::size_t l = 0; l < lam.size(); ++l) out.values[grp.add(dreps[d], lam[l])] = samples(l, d) * scale;
  return out;
}

FiberMatrix mod_zak(const Signal& f, const ContextPtr& ctx) {
  require_context_group(f, *ctx, Side::primal);
  return zak(dft(f), ctx);
}

Signal inverse_mod_zak(const FiberMatrix& fm) { return inverse_dft(inverse_zak(fm)); }

FiberVectorLambdaStar fiberization(const Signal& f, const ContextPtr& ctx) {
  require_context_group(f, *ctx, Side::primal);
  const auto& grp = ctx->group();
  // The transform on the dual lands back on G.
  Signal twice = dft(dft(f));
  const auto& pi = ctx->pi().representatives();
  const auto& star = ctx->lambda_star().elements();
  FiberVectorLambdaStar out{ctx, Eigen::MatrixXcd::Zero(pi.size(), star.size())};
  for (std::size_t x = 0; x < pi.size(); ++x)
    for (std::size_t k = 0; k < star.size(); ++k) out.entries(x, k) = twice.values[grp.add(pi[x], star[k])];
  return out;
}

}  // namespace modinv
