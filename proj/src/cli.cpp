#include "modinv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace modinv::cli {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"analyze", "membership", "frame-bounds", "decompose", "metric",
                                              "limit",   "invariance-check", "demo", "selftest"};
  return names;
}

bool needs_input(const std::string& command) { return command != "demo" && command != "selftest"; }

namespace {

struct Problem {
  ContextPtr ctx;
  std::vector<std::pair<std::string, Signal>> signals;

  const GroupSpec& group() const { return ctx->group(); }

  Signal resolve(const Json& entry, const std::string& path) const {
    if (entry.is_string()) {
      const auto name = entry.get<std::string>();
      for (const auto& [n, s] : signals)
        if (n == name) return s;
      throw ParseError(path, "unknown signal '" + name + "'");
    }
    return parse_signal(entry, group(), Side::primal, path);
  }

  std::vector<Signal> resolve_list(const Json& list, const std::string& path) const {
    if (!list.is_array()) throw ParseError(path, "expected an array of signal names or signals");
    std::vector<Signal> out;
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(resolve(list[i], path + "/" + std::to_string(i)));
    return out;
  }

  ModInvariantSpace space(const Json& desc, const std::string& path) const {
    if (!desc.is_object()) throw ParseError(path, "expected a space description object");
    if (desc.contains("support")) {
      std::vector<std::size_t> support;
      for (const auto& e : parse_elements(desc["support"], group(), Side::primal, path + "/support"))
        support.push_back(group().index_of(e.residues));
      return space_from_support(support, ctx);
    }
    if (!desc.contains("generators")) throw ParseError(path, "space needs \"generators\" or \"support\"");
    return ModInvariantSpace::generated_by(ctx, resolve_list(desc["generators"], path + "/generators"));
  }
};

ContextPtr parse_context(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (!j.contains("group")) throw ParseError(path + "/group", "missing");
  auto g = parse_group(j["group"], path + "/group");
  std::vector<GroupElement> lam;
  if (j.contains("lambda_generators"))
    lam = parse_elements(j["lambda_generators"], g, Side::dual, path + "/lambda_generators");
  return make_context(g, std::move(lam));
}

Problem parse_problem(const Json& j) {
  Problem p{parse_context(j, ""), {}};
  if (j.contains("signals")) {
    const auto& s = j["signals"];
    if (!s.is_object()) throw ParseError("/signals", "expected an object of named signals");
    for (const auto& [name, value] : s.items())
      p.signals.emplace_back(name, parse_signal(value, p.group(), Side::primal, "/signals/" + name));
  }
  return p;
}

double tolerance_for(const Json& input, const Options& opts, double fallback) {
  double t = fallback;
  if (input.is_object() && input.contains("tolerance")) {
    if (!input["tolerance"].is_number()) throw ParseError("/tolerance", "expected a number");
    t = input["tolerance"].get<double>();
  }
  if (opts.tolerance) t = *opts.tolerance;
  if (!(t > 0.0) || !std::isfinite(t)) throw ParseError("/tolerance", "tolerance must be positive");
  return t;
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("/") + name, "missing");
  return j[name];
}

Json cmd_analyze(const Json& in) {
  auto p = parse_problem(in);
  auto w = p.space(in, "");
  auto rf = to_json(w.range(), *p.ctx);
  return Json{{"command", "analyze"},
              {"context", context_json(*p.ctx)},
              {"dims", rf["dims"]},
              {"total_dim", w.dimension()},
              {"minimal_generator_count", minimal_generator_count(w)},
              {"range_function", rf["fibers"]}};
}

Json cmd_membership(const Json& in, const Options& opts) {
  auto p = parse_problem(in);
  auto w = p.space(in, "");
  const double tol = tolerance_for(in, opts, kMembershipTolerance);
  const auto& tests = field(in, "test_signals");
  if (!tests.is_array()) throw ParseError("/test_signals", "expected an array");
  Json results = Json::array();
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto path = "/test_signals/" + std::to_string(i);
    auto f = p.resolve(tests[i], path);
    auto m = membership(f, w, tol);
    Json label = tests[i].is_string() ? Json(tests[i]) : Json(static_cast<int>(i));
    results.push_back(Json{{"signal", label}, {"member", m.member}, {"residual", m.residual}});
  }
  return Json{{"command", "membership"}, {"tolerance", tol}, {"results", std::move(results)}};
}

Json cmd_frame_bounds(const Json& in, const Options& opts) {
  auto p = parse_problem(in);
  auto gens = p.resolve_list(field(in, "generators"), "/generators");
  if (gens.empty()) throw ParseError("/generators", "frame bounds need at least one generator");
  const Measure m = opts.measure.value_or(Measure::normalized);
  auto report = to_json(fiber_frame_bounds(gens, p.ctx, m), *p.ctx);
  Json out{{"command", "frame-bounds"}};
  for (auto& [k, v] : report.items()) out[k] = v;
  if (opts.oracle) {
    auto oracle = brute_force_frame_bounds(gens, p.ctx, m);
    out["oracle"] = Json{{"A", oracle.lower}, {"B", oracle.upper}, {"frame", oracle.is_frame},
                         {"parseval", oracle.is_parseval}, {"riesz", oracle.is_riesz}};
  }
  return out;
}

Json cmd_decompose(const Json& in) {
  auto p = parse_problem(in);
  auto w = p.space(in, "");
  auto dec = principal_decompose(w);
  auto check = verify_decomposition(w, dec);
  Json gens = Json::array();
  for (const auto& g : dec.generators) gens.push_back(to_json(g));
  Json supports = Json::array();
  for (const auto& s : dec.supports) {
    Json xs = Json::array();
    for (auto x : s) xs.push_back(to_json(element_at(p.group(), Side::primal, p.ctx->pi().representatives()[x])));
    supports.push_back(std::move(xs));
  }
  return Json{{"command", "decompose"},
              {"count", dec.generators.size()},
              {"generators", std::move(gens)},
              {"supports", std::move(supports)},
              {"verification", to_json(check)}};
}

Json cmd_metric(const Json& in) {
  auto p = parse_problem(in);
  const auto& spaces = field(in, "spaces");
  if (!spaces.is_array() || spaces.size() != 2) throw ParseError("/spaces", "metric needs exactly two spaces");
  auto v = p.space(spaces[0], "/spaces/0");
  auto w = p.space(spaces[1], "/spaces/1");
  Json out{{"command", "metric"}};
  const auto report = to_json(mod_metric(v, w), *p.ctx);
  for (const auto& [k, val] : report.items()) out[k] = val;
  return out;
}

Json cmd_limit(const Json& in, const Options& opts) {
  std::vector<ModInvariantSpace> seq;
  ContextPtr ctx;
  double tol = 0;
  if (in.is_array()) {
    tol = tolerance_for(Json::object(), opts, 1e-3);
    if (in.empty()) throw ParseError("", "limit needs at least one space");
    for (std::size_t i = 0; i < in.size(); ++i) {
      const auto path = "/" + std::to_string(i);
      auto c = parse_context(in[i], path);
      if (!ctx) ctx = c;
      if (!(c->group() == ctx->group()) || !(c->lambda() == ctx->lambda()))
        throw ParseError(path, "all spaces must share the group and Lambda");
      Problem p{ctx, {}};
      seq.push_back(p.space(in[i], path));
    }
  } else {
    tol = tolerance_for(in, opts, 1e-3);
    auto p = parse_problem(in);
    ctx = p.ctx;
    const auto& spaces = field(in, "spaces");
    if (!spaces.is_array() || spaces.empty()) throw ParseError("/spaces", "limit needs a non-empty array");
    for (std::size_t i = 0; i < spaces.size(); ++i) seq.push_back(p.space(spaces[i], "/spaces/" + std::to_string(i)));
  }
  auto r = cauchy_limit(seq, tol);
  Json dims = Json::array();
  for (auto d : r.limit.range().dims()) dims.push_back(d);
  return Json{{"command", "limit"},
              {"tolerance", tol},
              {"tail_start", r.tail_start},
              {"theta_to_tail", r.theta_to_tail},
              {"dims", std::move(dims)},
              {"limit", space_description(r.limit)}};
}

Json cmd_invariance(const Json& in, const Options& opts) {
  auto p = parse_problem(in);
  const char* key = in.contains("spanning_set") ? "spanning_set" : "generators";
  auto set = p.resolve_list(field(in, key), std::string("/") + key);
  const double tol = tolerance_for(in, opts, kRankTolerance);
  return Json{{"command", "invariance-check"}, {"invariant", is_modulation_invariant(set, p.ctx->lambda(), tol)}};
}

Result failure(int code, const std::string& msg) { return {code, Json{{"error", msg}}}; }

}  // namespace

Result run(const std::string& command, const Json& input, const Options& opts) {
  try {
    if (command == "demo") {
      bool ok = true;
      auto r = demo(ok);
      return {ok ? kExitOk : kExitNumerical, std::move(r)};
    }
    if (command == "selftest") {
      bool ok = true;
      auto r = selftest(opts.seed, ok);
      return {ok ? kExitOk : kExitNumerical, std::move(r)};
    }
    if (command == "limit") return {kExitOk, cmd_limit(input, opts)};
    if (!input.is_object()) throw ParseError("", "expected a problem description object");
    if (command == "analyze") return {kExitOk, cmd_analyze(input)};
    if (command == "membership") return {kExitOk, cmd_membership(input, opts)};
    if (command == "frame-bounds") return {kExitOk, cmd_frame_bounds(input, opts)};
    if (command == "decompose") return {kExitOk, cmd_decompose(input)};
    if (command == "metric") return {kExitOk, cmd_metric(input)};
    if (command == "invariance-check") return {kExitOk, cmd_invariance(input, opts)};
    return failure(kExitValidation, "unknown command '" + command + "'");
  } catch (const NumericalGuardError& e) {
    return failure(kExitNumerical, e.what());
  } catch (const ParseError& e) {
    return failure(kExitValidation, e.what());
  } catch (const std::invalid_argument& e) {
    return failure(kExitValidation, e.what());
  } catch (const Json::exception& e) {
    return failure(kExitValidation, e.what());
  }
}

Result run_text(const std::string& command, const std::string& text, const Options& opts) {
  Json input;
  if (needs_input(command)) {
    try {
      input = Json::parse(text);
    } catch (const Json::parse_error& e) {
      return failure(kExitValidation, std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
  }
  return run(command, input, opts);
}

}  // namespace modinv::cli
