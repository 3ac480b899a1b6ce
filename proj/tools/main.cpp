#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"reptopo: representativity of curves on standard surfaces"};
  app.require_subcommand(1);
  bool pretty = false;
  bool json_out = true;
  bool no_timing = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");
  app.add_flag("--json", json_out, "JSON report on standard output (default)");
  app.add_flag("--no-timing", no_timing, "Leave wall-clock time out of the report");

  std::string spec;
  auto* generate = app.add_subcommand("generate", "Print the multicurve of a family spec");
  generate->add_option("spec", spec, "torus:p,q | exactly:n,g | lpq:p,q")->required();

  std::vector<std::string> specs;
  auto* verify = app.add_subcommand("verify", "Check a family's claimed counts and representativity");
  verify->add_option("specs", specs, "One or more family specs")->required();

  std::string path;
  int n = 0;
  auto* certify = app.add_subcommand("certify", "Run the piece certificate on hand-encoded pieces");
  certify->add_option("file", path, "JSON file with the pieces")->required();
  certify->add_option("-n,--n", n, "Target lower bound")->required()->check(CLI::NonNegativeNumber);

  auto* facewidth = app.add_subcommand("facewidth", "Genus and face-width of a rotation system");
  facewidth->add_option("file", path, "JSON map file")->required();

  cli::BoundsInput bounds_in;
  std::vector<int> graph;
  auto* bounds = app.add_subcommand("bounds", "Propagate invariant intervals");
  bounds->add_option("--tag", bounds_in.tags, "Subject tag, e.g. torus_knot=3,5 or two_bridge");
  bounds->add_option("--seed", bounds_in.seeds, "Seed fact, e.g. b=3 or bs=4..8");
  bounds->add_option("--graph", graph, "V,E,C of the underlying graph (seeds beta1)")->delimiter(',')->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  cli::Outcome outcome;
  try {
    if (*generate) {
      outcome = cli::cmd_generate(spec);
    } else if (*verify) {
      outcome = cli::cmd_verify(specs);
    } else if (*certify) {
      outcome = cli::cmd_certify(path, n);
    } else if (*facewidth) {
      outcome = cli::cmd_facewidth(path);
    } else {
      if (!graph.empty()) bounds_in.graph = std::array{graph[0], graph[1], graph[2]};
      outcome = cli::cmd_bounds(bounds_in);
    }
  } catch (const reptopo::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInput;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (pretty) {
    std::cout << outcome.text;
  } else {
    if (!no_timing && !*generate) outcome.report["timing"] = {{"wall_ms", ms}};
    std::cout << outcome.report.dump(2) << "\n";
  }
  if (outcome.exit_code == cli::kExitFailed) {
    auto reports = outcome.report.contains("reports") ? outcome.report["reports"] : nlohmann::json::array({outcome.report});
    for (const auto& r : reports) {
      for (const auto& c : r.value("checks", nlohmann::json::array())) {
        if (!c.at("pass").get<bool>()) std::cerr << "failed: " << c.at("name").get<std::string>() << "\n";
      }
    }
  }
  return outcome.exit_code;
}
