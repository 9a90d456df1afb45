#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bires/ring.hpp"

namespace bires {

/// Union of translated quadrants (corner + N^2). Corners are kept as a sorted antichain
/// (ascending x, hence descending y) with nonnegative components.
class RegRegion {
 public:
  RegRegion() = default;
  /// Clamps negative components to zero and drops dominated corners.
  explicit RegRegion(std::vector<BiDeg> corners);

  const std::vector<BiDeg>& corners() const { return corners_; }
  bool empty() const { return corners_.empty(); }
  /// strict=false: nu lies in some corner + N^2. strict=true: nu = mu + (p,p') with mu in
  /// the region and p+p' > 0.
  bool contains(BiDeg nu, bool strict) const;
  friend bool operator==(const RegRegion&, const RegRegion&) = default;

 private:
  std::vector<BiDeg> corners_;
};

bool region_contains(const RegRegion& r, BiDeg nu, bool strict);

/// Degree bookkeeping for the map (phi | Psi).
struct DegreeData {
  std::vector<BiDeg> row_degrees;  // (e_j, f_j) = (k_j, l_j)
  std::vector<BiDeg> phi_degrees;  // (c_i, d_i)
  std::vector<BiDeg> f_degrees;    // (a_i, b_i), three entries
};

/// Bidegree lattice points of St_i.
std::vector<BiDeg> st_set(int i);

/// Eagon-Northcott regularity estimate for DegreeData; throws InputError on violated
/// preconditions. Non-uniform F-degrees use the componentwise maximum.
RegRegion en_region(const DegreeData& dd);

struct NuChoice {
  BiDeg nu;
  bool from_override = false;
  /// Set when an override is not strictly interior to the region.
  std::optional<std::string> warning;
};

/// Picks the strand degree: override verbatim, else the strictly interior nu >= the
/// lower bounds minimizing (nu_x+1)(nu_y+1), ties to smaller nu_x. Throws MathError when
/// nothing qualifies below search_bound in either coordinate.
NuChoice choose_nu(const RegRegion& r, BiDeg min_col_degree, BiDeg max_minor_degree,
                   std::optional<BiDeg> override_nu, int search_bound = 64);

struct GeneralPointsRegion {
  RegRegion region;
  /// r < 4 lies outside the range where the six-corner shape is meaningful.
  bool below_supported = false;
};

GeneralPointsRegion general_points_region(int r);

/// Shifts of the virtual complete-intersection resolution of r general points.
struct ShiftTable {
  std::vector<BiDeg> deg1;
  std::vector<BiDeg> deg2;
  friend bool operator==(const ShiftTable&, const ShiftTable&) = default;
};

ShiftTable virtual_ci_shifts(int r);

/// Multi-line quadrant sketch of a region; '#' marks corners, '+' region cells, '*' nu.
std::string ascii_sketch(const RegRegion& r, std::optional<BiDeg> nu = std::nullopt);

}  // namespace bires
