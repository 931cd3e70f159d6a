#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "modinv/group.hpp"

namespace modinv {

using cplx = std::complex<double>;

/// A complex function on G (primal) or on its dual, indexed mixed-radix.
/// Norms use counting measure.
struct Signal {
  GroupSpec group;
  Side side = Side::primal;
  std::vector<cplx> values;

  Signal(GroupSpec g, Side s);
  Signal(GroupSpec g, Side s, std::vector<cplx> v);

  static Signal delta(const GroupSpec& g, Side s, std::size_t index);

  double norm() const;
  Signal& operator+=(const Signal& o);
  Signal& operator-=(const Signal& o);
  Signal& operator*=(cplx c);
};

Signal operator+(Signal a, const Signal& b);
Signal operator-(Signal a, const Signal& b);
Signal operator*(cplx c, Signal a);
double distance(const Signal& a, const Signal& b);

/// M_lambda f(x) = <x, lambda> f(x). lambda is an index into the dual.
Signal modulate(const Signal& f, std::size_t lambda);
/// T_mu g(xi) = g(xi - mu).
Signal translate(const Signal& g, std::size_t mu);

/**
 * Everything needed to fiberize L^2(G) with respect to a subgroup Lambda of
 * the dual: Lambda, its annihilator Lambda* in G, the section Pi of
 * G / Lambda* (fiber index) and the section D of dual / Lambda (fiber
 * coordinates). |Pi| = |Lambda| and |Pi| * |D| = |G|.
 */
class ModulationContext {
 public:
  /// Validates that the parts fit together; mismatches raise StructuralError.
  ModulationContext(Subgroup lambda, Section pi, Section d);

  const GroupSpec& group() const { return lambda_.parent(); }
  const Subgroup& lambda() const { return lambda_; }
  const Subgroup& lambda_star() const { return pi_.subgroup(); }
  const Section& pi() const { return pi_; }
  const Section& d() const { return d_; }

  std::size_t fiber_count() const { return pi_.size(); }
  std::size_t fiber_dim() const { return d_.size(); }

  /// Position in Pi of the coset containing -x, for x a position in Pi.
  std::size_t opposite_fiber(std::size_t x) const;

  /// chars(x, l) = <pi[x], lambda[l]>. Cached when |Pi| * |Lambda| <= 2^20,
  /// otherwise built into `scratch`; the returned reference is valid while both live.
  const Eigen::MatrixXcd& characters(Eigen::MatrixXcd& scratch) const;

 private:
  Subgroup lambda_;
  Section pi_;
  Section d_;
  std::shared_ptr<const Eigen::MatrixXcd> chars_;
};

using ContextPtr = std::shared_ptr<const ModulationContext>;

ContextPtr make_context(const GroupSpec& g, std::vector<GroupElement> lambda_generators);
ContextPtr make_context(const Subgroup& lambda);

/// Fiber field over Pi: row x is the fiber at the x-th representative.
struct FiberMatrix {
  ContextPtr context;
  Eigen::MatrixXcd entries;  // |Pi| x |D|
};

/// Fiberization output: row x holds values indexed by Lambda* in canonical order.
struct FiberVectorLambdaStar {
  ContextPtr context;
  Eigen::MatrixXcd entries;  // |Pi| x |Lambda*|
};

/// Unitary Fourier transform to the opposite side:
/// (F f)(xi) = |G|^{-1/2} sum_x f(x) conj(<x, xi>). Evaluated factor by factor.
Signal dft(const Signal& f);
/// Same transform by the direct O(|G|^2) sum; the reference path.
Signal dft_direct(const Signal& f);
/// Inverse of dft: |G|^{-1/2} sum_xi h(xi) <x, xi>.
Signal inverse_dft(const Signal& h);

/// Zg(x)(d) = |Lambda|^{-1/2} sum_{lambda in Lambda} g(d + lambda) <x, lambda>, g on the dual.
FiberMatrix zak(const Signal& g, const ContextPtr& ctx);
Signal inverse_zak(const FiberMatrix& fm);

/// zak(dft(f)) for f on G.
FiberMatrix mod_zak(const Signal& f, const ContextPtr& ctx);
Signal inverse_mod_zak(const FiberMatrix& fm);

/// entries[x][k] = (F_dual F f)(x + k) for k in Lambda*.
FiberVectorLambdaStar fiberization(const Signal& f, const ContextPtr& ctx);

}  // namespace modinv
