#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "winsel/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window interval selection benchmark"};

  std::string alg = "improved";
  std::string format = "csv";
  std::string out_path;
  std::size_t window = 0;
  double beta = 0;
  double delta = 0;
  winsel::HarnessConfig config;

  app.add_option("--alg", alg, "unit, cp, smooth, improved or oracle")->capture_default_str();
  app.add_option("--window", window, "Window length L (>= 2)")->required();
  auto* beta_opt = app.add_option("--beta", beta, "Smooth-histogram slack (default 0.1)");
  auto* delta_opt = app.add_option("--delta", delta, "Improved-algorithm slack (beta = delta/2)");
  app.add_option("--stream", config.stream, "Stream file or generator spec")->required();
  auto* oracle_on = app.add_flag("--oracle", "Compare against the exact window oracle");
  auto* oracle_off = app.add_flag("--no-oracle", "Disable the oracle");
  oracle_on->excludes(oracle_off);
  app.add_option("--sample-every", config.sample_every, "Emit every k-th step")
      ->capture_default_str();
  app.add_option("--out", out_path, "Output path (default stdout)");
  app.add_option("--format", format, "csv or jsonl")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : winsel::kExitConfig;
  }

  try {
    config.algorithm = winsel::parse_algorithm(alg);
    config.format = winsel::parse_format(format);
  } catch (const winsel::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return winsel::kExitConfig;
  }
  config.window = window;
  if (*beta_opt) config.beta = beta;
  if (*delta_opt) config.delta = delta;
  if (*oracle_on) config.oracle = true;
  if (*oracle_off) config.oracle = false;

  if (out_path.empty()) return winsel::run(config, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "config error: cannot write '" << out_path << "'\n";
    return winsel::kExitConfig;
  }
  return winsel::run(config, out, std::cerr);
}
