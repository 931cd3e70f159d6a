#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/fiber_spaces.hpp"

namespace modinv {

/// Measure on Lambda used for the system E^Lambda(A). `normalized` gives each
/// lambda weight 1/|Lambda| and makes system bounds equal fiber bounds;
/// `counting` scales system bounds by |Lambda|.
enum class Measure { normalized, counting };

const char* to_string(Measure m);
std::optional<Measure> parse_measure(const std::string& s);

/// Largest |G| accepted by the dense ambient oracle.
inline constexpr std::size_t kOracleMaxOrder = 4096;
inline constexpr double kParsevalTolerance = 1e-8;

struct FiberBounds {
  std::size_t x = 0;  // position in Pi
  double lower = 0.0;
  double upper = 0.0;
  std::size_t dim = 0;
  bool independent = false;  // fiber vectors linearly independent
};

struct FrameReport {
  std::vector<FiberBounds> per_fiber;  // fibers with J(x) != {0}; empty for the oracle
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;
  bool is_parseval = false;
  bool is_riesz = false;
  Measure measure = Measure::normalized;
};

/**
 * Frame bounds of E^Lambda(A) read off the fibers: at each x the nonzero
 * squared singular values of the |D| x |A| matrix of fiber vectors
 * mod_zak(phi)(x). System bounds are the min/max over fibers with J(x) != {0}.
 *
 * The system is Riesz exactly when every fiber, including those where all
 * generators vanish, has |A| linearly independent vectors.
 */
FrameReport fiber_frame_bounds(const std::vector<Signal>& generators, const ContextPtr& ctx,
                               Measure measure = Measure::normalized);

/// Dense ambient oracle: spectrum of sum_{lambda, phi} w <., M_lambda phi> M_lambda phi
/// restricted to span E^Lambda(A). Throws NumericalGuardError above kOracleMaxOrder.
FrameReport brute_force_frame_bounds(const std::vector<Signal>& generators, const ContextPtr& ctx,
                                     Measure measure = Measure::normalized);

struct RieszFiberDiagnostic {
  std::size_t x = 0;
  std::size_t rank = 0;
  std::size_t count = 0;
  double smallest_singular_value = 0.0;
};

struct RieszReport {
  bool is_riesz = true;
  std::vector<RieszFiberDiagnostic> per_fiber;
};

RieszReport riesz_diagnostics(const std::vector<Signal>& generators, const ContextPtr& ctx);
bool is_riesz_basis(const std::vector<Signal>& generators, const ContextPtr& ctx);

}  // namespace modinv
