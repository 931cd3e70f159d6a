#include "modinv/sampling.hpp"

#include <algorithm>

namespace modinv::sampling {

GroupSpec random_group(Rng& rng, std::size_t max_order) {
  if (max_order < 2) throw PreconditionError("random_group needs max_order >= 2");
  std::uniform_int_distribution<int> nfactors(1, 3);
  const int k = nfactors(rng);
  std::vector<int> factors;
  std::size_t order = 1;
  for (int j = 0; j < k; ++j) {
    const std::size_t room = max_order / order;
    if (room < 2) break;
    const auto cap = static_cast<int>(std::min<std::size_t>(room, j == 0 && k > 1 ? 16 : room));
    std::uniform_int_distribution<int> pick(2, cap);
    factors.push_back(pick(rng));
    order *= static_cast<std::size_t>(factors.back());
  }
  return GroupSpec(std::move(factors));
}

Subgroup random_lambda(Rng& rng, const GroupSpec& g) {
  std::uniform_int_distribution<int> mode(0, 9);
  const int m = mode(rng);
  if (m == 0) return whole_group(g, Side::dual);
  const int count = m < 4 ? 1 : (m < 8 ? 2 : 0);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::vector<GroupElement> gens;
  for (int i = 0; i < count; ++i) gens.push_back(element_at(g, Side::dual, pick(rng)));
  return subgroup_from_generators(g, Side::dual, std::move(gens));
}

Signal random_signal(Rng& rng, const GroupSpec& g, Side side) {
  std::normal_distribution<double> n(0.0, 1.0);
  Signal s(g, side);
  for (auto& v : s.values) v = {n(rng), n(rng)};
  return s;
}

Signal random_sparse_signal(Rng& rng, const GroupSpec& g, double density) {
  std::bernoulli_distribution keep(density);
  Signal s = random_signal(rng, g);
  for (auto& v : s.values)
    if (!keep(rng)) v = 0.0;
  return s;
}

std::vector<Signal> random_generators(Rng& rng, const ModulationContext& ctx, std::size_t max_count) {
  const auto& g = ctx.group();
  std::uniform_int_distribution<std::size_t> count(0, max_count);
  std::uniform_int_distribution<int> kind(0, 5);
  std::normal_distribution<double> coef(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> lam_pick(0, ctx.lambda().order() - 1);
  const std::size_t n = count(rng);
  std::vector<Signal> out;
  for (std::size_t i = 0; i < n; ++i) {
    const int k = kind(rng);
    if (k <= 1 || out.empty()) {
      out.push_back(random_signal(rng, g));
    } else if (k <= 3) {
      std::uniform_real_distribution<double> dens(0.1, 0.6);
      out.push_back(random_sparse_signal(rng, g, dens(rng)));
    } else {
      Signal s(g, Side::primal);
      for (const auto& prev : out)
        s += cplx{coef(rng), coef(rng)} * modulate(prev, ctx.lambda().elements()[lam_pick(rng)]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace modinv::sampling
