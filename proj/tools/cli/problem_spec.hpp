#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bires/structmat.hpp"

namespace bires::cli {

inline constexpr const char* kSchema = "bires/1";

enum class SpecMode { Resultant, Implicitize, Region, Theta };

std::string to_string(SpecMode m);
SpecMode parse_mode(const std::string& s);

struct OutputOptions {
  std::string format = "text";  // text | json
  std::optional<std::string> emit_matrix;
  std::optional<std::string> report;
  friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

/// Problem file contents. Every polynomial is a grammar string.
struct ProblemSpec {
  std::string schema = kSchema;
  SpecMode mode = SpecMode::Resultant;
  std::vector<std::string> generators;
  bool complete_intersection = true;
  std::optional<std::vector<std::vector<std::string>>> phi;  // rows indexed by generator
  std::optional<std::array<BiDeg, 3>> fdegs;
  std::optional<std::vector<std::vector<std::string>>> h;  // rows indexed by generator, four columns
  std::optional<BiDeg> nu;
  std::optional<int> sum_mult;
  std::optional<std::uint64_t> seed;
  OutputOptions output;
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

nlohmann::json to_json(const ProblemSpec& s);
/// Strict: unknown keys, wrong types and inconsistent combinations raise InputError.
ProblemSpec spec_from_json(const nlohmann::json& j);
/// Reads and validates a problem file. A missing file raises InputError("file not found: ...").
ProblemSpec load_spec(const std::string& path);

/// Parsed mathematical content of a spec.
struct Problem {
  GSpec g;
  std::optional<std::array<BiDeg, 3>> fdegs;
  std::optional<BigradedMatrix> h;
};

Problem build_problem(const ProblemSpec& s);

}  // namespace bires::cli
