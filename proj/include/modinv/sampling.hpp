#pragma once

#include <random>
#include <vector>

#include "modinv/transforms.hpp"

namespace modinv::sampling {

using Rng = std::mt19937_64;

/// Product of one to three cyclic factors with order <= max_order (>= 2).
GroupSpec random_group(Rng& rng, std::size_t max_order);
/// Lambda generated by zero to two random characters, sometimes the whole dual.
Subgroup random_lambda(Rng& rng, const GroupSpec& g);

Signal random_signal(Rng& rng, const GroupSpec& g, Side side = Side::primal);
/// Gaussian values on a random subset of roughly `density` of the points.
Signal random_sparse_signal(Rng& rng, const GroupSpec& g, double density);

/// Zero to max_count generators mixing dense, sparse and dependent signals
/// (random combinations of modulates of earlier generators).
std::vector<Signal> random_generators(Rng& rng, const ModulationContext& ctx, std::size_t max_count);

}  // namespace modinv::sampling
