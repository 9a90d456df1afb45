#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bires/exactla.hpp"
#include "bires/regions.hpp"
#include "bires/strand.hpp"
#include "bires/structmat.hpp"

namespace bires {

struct PipelineOptions {
  std::optional<BiDeg> nu;
  std::uint64_t seed = 1;
  /// Resultant mode: total base-point multiplicity of G (required unless G is a complete
  /// intersection). Implicitization mode: total multiplicity of the parametrization's
  /// base locus, used to predict the surface degree.
  std::optional<int> sum_mult;
  int fallback_budget = 8;
  int max_retries = 4;
};

enum class Mode { Resultant, Implicitize };

struct ResultReport {
  Mode mode = Mode::Resultant;
  OuterRing ring;

  BiDeg nu;
  bool nu_from_override = false;
  RegRegion region;
  std::size_t theta_rows = 0;
  std::size_t theta_cols = 0;

  int sum_mult = 0;
  std::optional<std::array<int, 3>> predicted_coeff_degrees;
  std::optional<int> predicted_surface_degree;

  /// Residual resultant, or the affine implicit equation H(X,Y,Z,1).
  OuterPoly result;
  std::optional<OuterPoly> homogenized;
  std::array<int, 3> block_degrees{};
  int total_degree = 0;

  bool fallback = false;
  std::size_t corank = 0;
  bool multiple_of_implicit_equation = false;
  std::vector<std::string> removed_factors;

  std::uint64_t seed = 0;
  int retries = 0;
  std::array<std::size_t, 3> avoiding_columns{};  // per block: columns picked before completion
  std::size_t fallback_minors = 0;
  std::vector<std::string> warnings;
};

/// Region, strand degree and Theta as both pipelines build them.
struct StrandSetup {
  OuterRing ring;
  RegRegion region;
  NuChoice nu;
  ThetaStrand theta;
};

StrandSetup resultant_strand(const GSpec& g, const std::array<BiDeg, 3>& fdegs,
                             const std::optional<BiDeg>& nu = std::nullopt);
StrandSetup implicit_strand(const GSpec& g, const BigradedMatrix& h, const std::optional<BiDeg>& nu = std::nullopt);

std::array<int, 3> coeff_degrees(const std::array<BiDeg, 3>& fdegs, int sum_mult);
int surface_degree(int a, int b, int sum_mult);

/// Warnings for F-degrees that miss the existence inequalities
/// (a_i,b_i) >= (k_j+1, l_j) and (a_i,b_i) >= (k_j', l_j'+1).
std::vector<std::string> degree_inequality_warnings(const GSpec& g, const std::array<BiDeg, 3>& fdegs);

ResultReport residual_resultant(const GSpec& g, const std::array<BiDeg, 3>& fdegs, const PipelineOptions& opt = {});
ResultReport implicitize(const GSpec& g, const BigradedMatrix& h, const PipelineOptions& opt = {});

struct FallbackResult {
  OuterPoly multiple;
  std::size_t minors_used = 0;
};

/// Gcd of up to `budget` distinct (rows-c)-minors that are nonsingular at the assignment
/// drawn from `seed`. Throws MathError for c = 0 or when no such minor turns up.
FallbackResult fallback_submaximal(const ThetaStrand& t, const OuterRing& ring, std::size_t corank,
                                   std::uint64_t seed, int budget = 8);

/// Multiplies each term by W^(total_degree - its degree). W is variable 3 of the
/// implicit ring.
OuterPoly homogenize(const OuterPoly& h_affine, int total_degree);

/// Deterministic sub-seed derivation.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace bires
