#pragma once

#include <vector>

#include "bires/structmat.hpp"

namespace bires {

struct MinorLabel {
  std::vector<std::size_t> columns;  // sorted column indices of the augmented matrix
  BiDeg degree;
  /// Bit i set iff F-column i participates.
  unsigned f_mask = 0;

  bool involves_f(int i) const { return (f_mask >> i) & 1u; }
  friend bool operator==(const MinorLabel&, const MinorLabel&) = default;
};

struct Minor {
  MinorLabel label;
  BiPoly value;
};

/// Every maximal minor in lexicographic order of column subsets. F-columns are the ones
/// after M.syzygy_columns().
std::vector<Minor> maximal_minors(const BigradedMatrix& m);

/// Determinant of a small square BiPoly matrix by cofactor expansion along the
/// sparsest row (or along `row` when given).
BiPoly cofactor_det(const std::vector<std::vector<BiPoly>>& a, int row = -1);

struct ThetaColumn {
  std::size_t minor;  // index into ThetaStrand::minors
  ParamMonomial multiplier;
};

/// The degree-nu strand. Columns are stored column-major: entries[c][r] is the
/// coefficient of rows[r] in multiplier_c * minor_c.
struct ThetaStrand {
  BiDeg nu;
  std::vector<ParamMonomial> rows;
  std::vector<MinorLabel> minors;
  std::vector<ThetaColumn> columns;
  std::vector<std::vector<OuterPoly>> entries;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return columns.size(); }
  const OuterPoly& at(std::size_t r, std::size_t c) const { return entries[c][r]; }
  const MinorLabel& label(std::size_t c) const { return minors[columns[c].minor]; }
};

ThetaStrand theta(const std::vector<Minor>& minors, BiDeg nu);
ThetaStrand theta(const BigradedMatrix& m, BiDeg nu);

/// Expected column count: sum over minors of |monomial_basis(nu - deg)|.
std::size_t theta_column_count(const std::vector<MinorLabel>& minors, BiDeg nu);

}  // namespace bires
