#include "mcenter/generators.hpp"
#include "mcenter/io.hpp"
#include "mcenter/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

int emit(const nlohmann::json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central measures, quotient towers and canonical orders of finite metric spaces"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string command, space_file, gen_kind, out_path;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  mcenter::RunOptions options;
  std::string mu, nu;
  std::vector<std::size_t> sizes;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(mcenter::commands()));
  auto* space_opt = app.add_option("--space", space_file, "Space file (.json or .csv)");
  auto* gen_opt = app.add_option("--gen", gen_kind, "Generator: grid, cycle, equilateral, random, group")
                      ->excludes(space_opt);
  app.add_option("--params", params, "Generator parameters")->needs(gen_opt);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for the random generator (required by random)");
  app.add_option("--max-iter", options.max_iter, "Chebyshev iterations for central")->check(CLI::PositiveNumber);
  app.add_option("--mu", mu, "First measure for kantorovich: weights, uniform or dirac:K");
  app.add_option("--nu", nu, "Second measure for kantorovich");
  app.add_option("--sizes", sizes, "Grid sizes for explore-interval (default 3,4,5)")->delimiter(',');
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_flag("--timing", options.timing, "Include wall-clock seconds in the report");

  CLI11_PARSE(app, argc, argv);

  if (!mu.empty()) options.mu = mu;
  if (!nu.empty()) options.nu = nu;
  if (!sizes.empty()) options.explore_sizes = sizes;

  try {
    std::optional<mcenter::FiniteMetricSpace> space;
    if (!space_file.empty()) space = mcenter::load_space(space_file);
    else if (!gen_kind.empty()) {
      if (gen_kind == "random" && seed_opt->count() == 0) throw std::invalid_argument("random needs --seed");
      space = mcenter::generate(gen_kind, params, seed);
    }

    mcenter::Report report = mcenter::run(command, space, options);
    if (emit(report.to_json(), out_path) != 0) return 2;
    return report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    emit(mcenter::error_payload(command, e), out_path);
    return 2;
  }
}
