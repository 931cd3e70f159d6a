#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modinv/decomposition.hpp"
#include "modinv/fiber_spaces.hpp"
#include "modinv/frames.hpp"
#include "modinv/metric.hpp"

namespace modinv {

using Json = nlohmann::ordered_json;

/// Validation failure in an input document; `path` is a JSON pointer.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : std::runtime_error((path.empty() ? "/" : path) + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Readers. Residues must already be reduced (0 <= r < n_j).
GroupSpec parse_group(const Json& j, const std::string& path);
GroupElement parse_element(const Json& j, const GroupSpec& g, Side side, const std::string& path);
std::vector<GroupElement> parse_elements(const Json& j, const GroupSpec& g, Side side, const std::string& path);
cplx parse_complex(const Json& j, const std::string& path);
Signal parse_signal(const Json& j, const GroupSpec& g, Side side, const std::string& path);

// Writers. Complex numbers are [re, im]; doubles print as shortest round-trip decimals.
Json to_json(const GroupSpec& g);
Json to_json(const GroupElement& e);
Json to_json(cplx z);
Json to_json(const Signal& s);
Json to_json(const FiberMatrix& fm);
Json to_json(const RangeFunction& r, const ModulationContext& ctx);
Json to_json(const FrameReport& r, const ModulationContext& ctx);
Json to_json(const MetricReport& r, const ModulationContext& ctx);
Json to_json(const DecompositionReport& r);
Json context_json(const ModulationContext& ctx);
/// {"group":…, "lambda_generators":…, "generators":[signal,…]}
Json space_description(const ModInvariantSpace& w);

}  // namespace modinv
