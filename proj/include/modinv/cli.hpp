#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modinv/json_io.hpp"

namespace modinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

struct Options {
  std::optional<Measure> measure;
  std::optional<double> tolerance;
  bool oracle = false;  // frame-bounds: also run the ambient oracle
  std::uint64_t seed = 20190521;
};

struct Result {
  int exit_code = kExitOk;
  Json report;
};

const std::vector<std::string>& commands();
bool needs_input(const std::string& command);

/// Runs one command on a parsed problem description. Never throws for bad
/// input: validation problems give exit 1, numerical guards exit 2, and the
/// report then holds {"error": message}.
Result run(const std::string& command, const Json& input, const Options& opts);
/// Same, starting from raw text; malformed JSON gives exit 1.
Result run_text(const std::string& command, const std::string& text, const Options& opts);

/// Worked Z_4 scenarios and the nested chain; `passed` is false on any mismatch.
Json demo(bool& passed);
/// Seeded oracle-equivalence suites at reduced instance counts.
Json selftest(std::uint64_t seed, bool& passed);

}  // namespace modinv::cli
