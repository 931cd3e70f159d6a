// Command-line front end: one JSON problem in, one JSON report out.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "modinv/cli.hpp"

int main(int argc, char** argv) {
  namespace mc = modinv::cli;

  CLI::App app{"Modulation-invariant subspaces on finite abelian groups"};
  app.require_subcommand(1, 1);

  std::string input_path;
  std::string output_path;
  std::string measure;
  double tolerance = 0.0;
  bool oracle = false;
  std::uint64_t seed = mc::Options{}.seed;

  for (const auto& name : mc::commands()) {
    auto* sub = app.add_subcommand(name);
    if (mc::needs_input(name)) sub->add_option("--input", input_path, "problem description (default: stdin)");
    sub->add_option("--output", output_path, "write the report here instead of stdout");
    sub->add_option("--measure", measure, "measure on Lambda: normalized|counting")
        ->check(CLI::IsMember({"normalized", "counting"}));
    sub->add_option("--tolerance", tolerance, "membership / Cauchy / rank tolerance override");
    if (name == "frame-bounds") sub->add_flag("--oracle", oracle, "also run the dense ambient oracle");
    if (name == "selftest") sub->add_option("--seed", seed, "random seed for the suites");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : mc::kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto* sub = app.get_subcommands().front();

  mc::Options opts;
  if (!measure.empty()) opts.measure = modinv::parse_measure(measure);
  if (sub->count("--tolerance")) opts.tolerance = tolerance;
  opts.oracle = oracle;
  opts.seed = seed;

  std::string text;
  if (mc::needs_input(command)) {
    if (input_path.empty() || input_path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return mc::kExitValidation;
      }
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
  }

  const auto result = mc::run_text(command, text, opts);
  const std::string body = result.report.dump(2) + "\n";
  if (result.exit_code == mc::kExitOk || result.report.contains("command")) {
    if (output_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(output_path);
      out << body;
    }
  }
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
