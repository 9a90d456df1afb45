#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bires/pipeline.hpp"
#include "problem_spec.hpp"

namespace bires::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kMathError = 2 };

/// Command-line overrides; each one beats the corresponding problem-file field.
struct RunFlags {
  std::optional<BiDeg> nu;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> env_seed;  // BIRES_SEED, weaker than the file
  std::optional<std::string> emit_matrix;
  std::optional<std::string> format;
  std::optional<int> sum_mult;
  std::optional<std::string> output;
};

/// Applies the flags on top of the file; the result is what the report echoes.
ProblemSpec effective_spec(ProblemSpec s, const RunFlags& f);

/// Parses "A,B".
BiDeg parse_nu(const std::string& text);

nlohmann::json report_json(const ProblemSpec& spec, const ResultReport& r);
std::string report_text(const ResultReport& r);

/// Symbolic strand dump: rows, column labels and grammar-string entries.
nlohmann::json theta_json(const StrandSetup& s);
/// Numeric CSV of the strand specialized at the assignment drawn from `seed`.
std::string theta_csv(const StrandSetup& s, std::uint64_t seed);

/// Region summary: corners, suggested nu and a quadrant sketch.
nlohmann::json region_json(const ProblemSpec& spec, const StrandSetup& s);
std::string region_text(const StrandSetup& s);

/// Runs a problem file. Diagnostics go to `err`; the report goes to `out` unless an
/// output path is set.
int cmd_run(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err);
int cmd_region(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace bires::cli
