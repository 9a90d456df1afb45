#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("BIRES_SEED");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring malformed BIRES_SEED='" << v << "'\n";
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bires::cli;
  CLI::App app{"Residual resultants and implicitization over P1 x P1"};
  app.require_subcommand(1);

  std::string path;
  std::string nu, format, emit, output;
  std::uint64_t seed = 0;
  int sum_mult = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", path, "Problem file (JSON)")->required();
    sub->add_option("--nu", nu, "Strand degree override A,B");
    sub->add_option("--seed", seed, "Seed for random specializations (default: file, then BIRES_SEED, then 1)");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--sum-mult", sum_mult, "Total base-point multiplicity");
    sub->add_option("-o,--output", output, "Write the report to this file");
  };
  CLI::App* run = app.add_subcommand("run", "Run the problem file");
  add_common(run);
  run->add_option("--emit-matrix", emit, "Write the strand matrix as JSON to PATH and numerically to PATH.csv")
      ->expected(0, 1)
      ->default_str("theta.json");
  CLI::App* region = app.add_subcommand("region", "Print the regularity region and the suggested strand degree");
  add_common(region);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  RunFlags flags;
  flags.env_seed = env_seed();
  try {
    CLI::App* sub = run->parsed() ? run : region;
    if (sub->count("--nu")) flags.nu = parse_nu(nu);
    if (sub->count("--seed")) flags.seed = seed;
    if (sub->count("--format")) flags.format = format;
    if (sub->count("--sum-mult")) flags.sum_mult = sum_mult;
    if (sub->count("--output")) flags.output = output;
    if (sub == run && run->count("--emit-matrix")) flags.emit_matrix = emit.empty() ? "theta.json" : emit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return run->parsed() ? cmd_run(path, flags, std::cout, std::cerr) : cmd_region(path, flags, std::cout, std::cerr);
}
