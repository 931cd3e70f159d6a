#include "modinv/json_io.hpp"

#include <cmath>

namespace modinv {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

}  // namespace

GroupSpec parse_group(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("factors")) throw ParseError(path, "expected {\"factors\": [n1, ...]}");
  const auto& f = require_array(j["factors"], path + "/factors");
  if (f.empty()) throw ParseError(path + "/factors", "group needs at least one factor");
  std::vector<int> factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_number_integer() || f[i].get<long long>() < 2 || f[i].get<long long>() > (1 << 20))
      throw ParseError(at(path + "/factors", i), "cyclic order must be an integer >= 2");
    factors.push_back(f[i].get<int>());
  }
  try {
    return GroupSpec(std::move(factors));
  } catch (const StructuralError& e) {
    throw ParseError(path + "/factors", e.what());
  }
}

GroupElement parse_element(const Json& j, const GroupSpec& g, Side side, const std::string& path) {
  require_array(j, path);
  if (j.size() != g.rank())
    throw ParseError(path, "element needs " + std::to_string(g.rank()) + " residues, got " + std::to_string(j.size()));
  std::vector<int> r;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int n = g.factors()[i];
    if (!j[i].is_number_integer() || j[i].get<long long>() < 0 || j[i].get<long long>() >= n)
      throw ParseError(at(path, i), "residue must be an integer in [0, " + std::to_string(n) + ")");
    r.push_back(j[i].get<int>());
  }
  return {side, std::move(r)};
}

std::vector<GroupElement> parse_elements(const Json& j, const GroupSpec& g, Side side, const std::string& path) {
  require_array(j, path);
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_element(j[i], g, side, at(path, i)));
  return out;
}

cplx parse_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(path, "expected a [re, im] pair of numbers");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(path, "non-finite value");
  return {re, im};
}

Signal parse_signal(const Json& j, const GroupSpec& g, Side side, const std::string& path) {
  require_array(j, path);
  if (j.size() != g.order())
    throw ParseError(path, "signal needs " + std::to_string(g.order()) + " samples, got " + std::to_string(j.size()));
  std::vector<cplx> v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_complex(j[i], at(path, i)));
  return Signal(g, side, std::move(v));
}

Json to_json(const GroupSpec& g) {
  Json f = Json::array();
  for (int n : g.factors()) f.push_back(n);
  return Json{{"factors", f}};
}

Json to_json(const GroupElement& e) {
  Json out = Json::array();
  for (int r : e.residues) out.push_back(r);
  return out;
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Signal& s) {
  Json out = Json::array();
  for (const auto& v : s.values) out.push_back(to_json(v));
  return out;
}

namespace {

Json reps_json(const Section& s) {
  Json out = Json::array();
  for (auto r : s.representatives()) out.push_back(to_json(element_at(s.parent(), s.side(), r)));
  return out;
}

Json elements_json(const Subgroup& h) {
  Json out = Json::array();
  for (auto e : h.elements()) out.push_back(to_json(element_at(h.parent(), h.side(), e)));
  return out;
}

Json pi_element(const ModulationContext& ctx, std::size_t x) {
  return to_json(element_at(ctx.group(), Side::primal, ctx.pi().representatives()[x]));
}

}  // namespace

Json to_json(const FiberMatrix& fm) {
  Json rows = Json::array();
  for (Eigen::Index x = 0; x < fm.entries.rows(); ++x) {
    Json row = Json::array();
    for (Eigen::Index d = 0; d < fm.entries.cols(); ++d) row.push_back(to_json(fm.entries(x, d)));
    rows.push_back(std::move(row));
  }
  return Json{{"pi", reps_json(fm.context->pi())}, {"d", reps_json(fm.context->d())}, {"rows", std::move(rows)}};
}

Json context_json(const ModulationContext& ctx) {
  Json lam = Json::array();
  for (const auto& e : ctx.lambda().generators()) lam.push_back(to_json(e));
  return Json{{"group", to_json(ctx.group())},
              {"lambda_generators", lam},
              {"lambda", elements_json(ctx.lambda())},
              {"lambda_star", elements_json(ctx.lambda_star())},
              {"pi", reps_json(ctx.pi())},
              {"d", reps_json(ctx.d())}};
}

Json to_json(const RangeFunction& r, const ModulationContext& ctx) {
  Json fibers = Json::array();
  for (std::size_t x = 0; x < r.fiber_count(); ++x) {
    Json basis = Json::array();
    const auto& b = r.basis(x);
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      Json col = Json::array();
      for (Eigen::Index i = 0; i < b.rows(); ++i) col.push_back(to_json(b(i, c)));
      basis.push_back(std::move(col));
    }
    fibers.push_back(Json{{"x", pi_element(ctx, x)}, {"dim", r.dim(x)}, {"basis", std::move(basis)}});
  }
  Json dims = Json::array();
  for (auto d : r.dims()) dims.push_back(d);
  return Json{{"dims", std::move(dims)}, {"fibers", std::move(fibers)}};
}

Json to_json(const FrameReport& r, const ModulationContext& ctx) {
  Json per = Json::array();
  for (const auto& f : r.per_fiber)
    per.push_back(Json{{"x", pi_element(ctx, f.x)}, {"A", f.lower}, {"B", f.upper}, {"dim", f.dim}});
  return Json{{"per_fiber", std::move(per)},
              {"system",
               {{"A", r.lower},
                {"B", r.upper},
                {"frame", r.is_frame},
                {"parseval", r.is_parseval},
                {"riesz", r.is_riesz}}},
              {"measure", to_string(r.measure)}};
}

Json to_json(const MetricReport& r, const ModulationContext& ctx) {
  Json per = Json::array();
  for (std::size_t x = 0; x < r.per_fiber.size(); ++x)
    per.push_back(Json{{"x", pi_element(ctx, x)}, {"distance", r.per_fiber[x]}});
  return Json{{"theta", r.theta}, {"per_fiber", std::move(per)}, {"argmax_x", pi_element(ctx, r.argmax)}};
}

Json to_json(const DecompositionReport& r) {
  return Json{{"orthogonality", r.orthogonality},
              {"ambient_dim", r.ambient_dim},
              {"summand_dim_sum", r.summand_dim_sum},
              {"parseval", r.parseval},
              {"containment", r.containment},
              {"reconstruction", r.reconstruction},
              {"passed", r.passed()}};
}

Json space_description(const ModInvariantSpace& w) {
  const auto& ctx = *w.context();
  Json lam = Json::array();
  for (const auto& e : ctx.lambda().generators()) lam.push_back(to_json(e));
  Json gens = Json::array();
  for (const auto& g : w.generators()) gens.push_back(to_json(g));
  return Json{{"group", to_json(ctx.group())}, {"lambda_generators", std::move(lam)}, {"generators", std::move(gens)}};
}

}  // namespace modinv
