#include "modinv/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <sstream>

namespace modinv {

const char* to_string(Side s) { return s == Side::primal ? "primal" : "dual"; }

GroupSpec::GroupSpec(std::vector<int> factors) {
  if (factors.empty()) throw StructuralError("group needs at least one cyclic factor");
  auto d = std::make_shared<Data>();
  for (int n : factors) {
    if (n < 2) throw StructuralError("cyclic factor " + std::to_string(n) + " is below 2");
    if (d->order > (std::size_t{1} << 40) / static_cast<std::size_t>(n))
      throw StructuralError("group order overflows");
    d->order *= static_cast<std::size_t>(n);
    d->exponent = std::lcm(d->exponent, n);
  }
  const std::size_t k = factors.size();
  d->factors = std::move(factors);
  d->strides.assign(k, 1);
  for (std::size_t j = k - 1; j-- > 0;) d->strides[j] = d->strides[j + 1] * d->factors[j + 1];
  d->weights.resize(k);
  for (std::size_t j = 0; j < k; ++j) d->weights[j] = d->exponent / d->factors[j];

  d->residues.resize(d->order * k);
  for (std::size_t i = 0; i < d->order; ++i) {
    std::size_t rem = i;
    for (std::size_t j = 0; j < k; ++j) {
      d->residues[i * k + j] = static_cast<int>(rem / d->strides[j]);
      rem %= d->strides[j];
    }
  }

  // Conjugate-symmetric table, exact on the real and imaginary axes.
  const int L = d->exponent;
  d->roots.resize(L);
  for (int p = 0; p <= L / 2; ++p) {
    std::complex<double> w;
    if ((4 * p) % L == 0) {
      static constexpr std::complex<double> quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      w = quarter[(4 * p) / L];
    } else {
      w = std::polar(1.0, 2.0 * std::numbers::pi * p / L);
    }
    d->roots[p] = w;
    if (p != 0 && 2 * p != L) d->roots[L - p] = std::conj(w);
  }
  data_ = std::move(d);
}

std::size_t GroupSpec::index_of(std::span<const int> residues) const {
  if (residues.size() != rank())
    throw StructuralError("residue tuple has " + std::to_string(residues.size()) +
                          " entries, group " + describe() + " has rank " + std::to_string(rank()));
  std::size_t idx = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    int n = data_->factors[j];
    int r = ((residues[j] % n) + n) % n;
    idx += static_cast<std::size_t>(r) * data_->strides[j];
  }
  return idx;
}

std::span<const int> GroupSpec::residues_of(std::size_t index) const {
  return {data_->residues.data() + index * rank(), rank()};
}

std::size_t GroupSpec::add(std::size_t a, std::size_t b) const {
  const int* ra = data_->residues.data() + a * rank();
  const int* rb = data_->residues.data() + b * rank();
  std::size_t idx = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    int s = ra[j] + rb[j];
    if (s >= data_->factors[j]) s -= data_->factors[j];
    idx += static_cast<std::size_t>(s) * data_->strides[j];
  }
  return idx;
}

std::size_t GroupSpec::negate(std::size_t a) const {
  const int* ra = data_->residues.data() + a * rank();
  std::size_t idx = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    int s = ra[j] == 0 ? 0 : data_->factors[j] - ra[j];
    idx += static_cast<std::size_t>(s) * data_->strides[j];
  }
  return idx;
}

std::size_t GroupSpec::subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }

int GroupSpec::phase(std::size_t x, std::size_t xi) const {
  const int* rx = data_->residues.data() + x * rank();
  const int* rxi = data_->residues.data() + xi * rank();
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    acc += static_cast<std::int64_t>(rx[j]) * rxi[j] * data_->weights[j];
  return static_cast<int>(acc % data_->exponent);
}

std::complex<double> GroupSpec::root_of_unity(int p) const {
  const int L = data_->exponent;
  return data_->roots[static_cast<std::size_t>(((p % L) + L) % L)];
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < rank(); ++j) os << (j ? " x " : "") << "Z_" << data_->factors[j];
  return os.str();
}

GroupElement make_element(const GroupSpec& g, Side side, std::vector<int> residues) {
  if (residues.size() != g.rank())
    throw StructuralError("element has " + std::to_string(residues.size()) + " residues, expected " +
                          std::to_string(g.rank()));
  auto f = g.factors();
  for (std::size_t j = 0; j < residues.size(); ++j) residues[j] = ((residues[j] % f[j]) + f[j]) % f[j];
  return {side, std::move(residues)};
}

GroupElement element_at(const GroupSpec& g, Side side, std::size_t index) {
  auto r = g.residues_of(index);
  return {side, std::vector<int>(r.begin(), r.end())};
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  if (a.side != b.side) throw StructuralError("cannot add elements from G and its dual");
  return element_at(g, a.side, g.add(g.index_of(a.residues), g.index_of(b.residues)));
}

GroupElement negate(const GroupSpec& g, const GroupElement& a) {
  return element_at(g, a.side, g.negate(g.index_of(a.residues)));
}

std::complex<double> pairing(const GroupSpec& g, const GroupElement& x, const GroupElement& xi) {
  return pairing(g, x, g, xi);
}

std::complex<double> pairing(const GroupSpec& g_x, const GroupElement& x, const GroupSpec& g_xi,
                             const GroupElement& xi) {
  if (!(g_x == g_xi))
    throw StructuralError("pairing between " + g_x.describe() + " and " + g_xi.describe());
  if (x.side != Side::primal || xi.side != Side::dual)
    throw StructuralError("pairing expects an element of G and a character of the dual");
  return g_x.pairing_by_index(g_x.index_of(x.residues), g_x.index_of(xi.residues));
}

Subgroup::Subgroup(GroupSpec parent, Side side, std::vector<GroupElement> generators,
                   std::vector<std::size_t> elements)
    : parent_(std::move(parent)),
      side_(side),
      generators_(std::move(generators)),
      elements_(std::move(elements)),
      member_(parent_.order(), false) {
  for (auto e : elements_) member_[e] = true;
}

namespace {

std::vector<std::size_t> closure(const GroupSpec& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : gens) {
      auto next = g.add(queue[head], s);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Greedy generating set for a known element list: take the smallest element
// not yet reached until the closure is everything.
std::vector<GroupElement> greedy_generators(const GroupSpec& g, Side side,
                                            const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(g.order(), false);
  reached[0] = true;
  for (auto e : elements) {
    if (reached[e]) continue;
    gens.push_back(e);
    for (auto r : closure(g, gens)) reached[r] = true;
  }
  std::vector<GroupElement> out;
  for (auto i : gens) out.push_back(element_at(g, side, i));
  return out;
}

}  // namespace

Subgroup subgroup_from_generators(const GroupSpec& g, Side side, std::vector<GroupElement> gens) {
  std::vector<std::size_t> idx;
  for (auto& e : gens) {
    if (e.side != side)
      throw StructuralError(std::string("generator lives on the ") + to_string(e.side) +
                            " side, subgroup on the " + to_string(side) + " side");
    e = make_element(g, side, e.residues);
    idx.push_back(g.index_of(e.residues));
  }
  auto elements = closure(g, idx);
  return Subgroup(g, side, std::move(gens), std::move(elements));
}

Subgroup trivial_subgroup(const GroupSpec& g, Side side) { return subgroup_from_generators(g, side, {}); }

Subgroup whole_group(const GroupSpec& g, Side side) {
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    std::vector<int> r(g.rank(), 0);
    r[j] = 1;
    gens.push_back({side, std::move(r)});
  }
  return subgroup_from_generators(g, side, std::move(gens));
}

Subgroup annihilator(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<std::size_t> gens;
  for (const auto& e : h.generators()) gens.push_back(g.index_of(e.residues));
  std::vector<std::size_t> elements;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto s : gens) {
      if (g.phase(x, s) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) elements.push_back(x);
  }
  Side side = opposite(h.side());
  auto generators = greedy_generators(g, side, elements);
  return Subgroup(g, side, std::move(generators), std::move(elements));
}

Section::Section(Subgroup subgroup, std::vector<std::size_t> representatives,
                 std::vector<std::size_t> coset_of)
    : subgroup_(std::move(subgroup)),
      representatives_(std::move(representatives)),
      coset_of_(std::move(coset_of)) {}

Section make_section(const Subgroup& h) {
  const auto& g = h.parent();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), unset);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unset) continue;
    for (auto e : h.elements()) coset_of[g.add(x, e)] = reps.size();
    reps.push_back(x);
  }
  return Section(h, std::move(reps), std::move(coset_of));
}

CosetSplit coset_decompose(const GroupElement& g, const Section& s) {
  if (g.side != s.side()) throw StructuralError("element and section live on different sides");
  const auto& grp = s.parent();
  auto idx = grp.index_of(g.residues);
  auto rep = s.representatives()[s.coset_index(idx)];
  return {element_at(grp, g.side, rep), element_at(grp, g.side, grp.subtract(idx, rep))};
}

}  // namespace modinv
