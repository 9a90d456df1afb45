#include "bires/strand.hpp"

#include <algorithm>

#include "bires/error.hpp"

namespace bires {

BiPoly cofactor_det(const std::vector<std::vector<BiPoly>>& a, int row) {
  std::size_t n = a.size();
  if (n == 0) return BiPoly(1);
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  std::size_t r = 0;
  if (row >= 0) {
    r = static_cast<std::size_t>(row);
  } else {
    std::size_t best = n + 1;
    for (std::size_t k = 0; k < n; ++k) {
      auto nz = static_cast<std::size_t>(std::count_if(a[k].begin(), a[k].end(), [](const BiPoly& p) { return !p.is_zero(); }));
      if (nz < best) {
        best = nz;
        r = k;
      }
    }
  }
  BiPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[r][c].is_zero()) continue;
    std::vector<std::vector<BiPoly>> sub;
    sub.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == r) continue;
      std::vector<BiPoly> line;
      line.reserve(n - 1);
      for (std::size_t l = 0; l < n; ++l)
        if (l != c) line.push_back(a[k][l]);
      sub.push_back(std::move(line));
    }
    BiPoly term = a[r][c] * cofactor_det(sub);
    det = (r + c) % 2 ? det - term : det + term;
  }
  return det;
}

std::vector<Minor> maximal_minors(const BigradedMatrix& m) {
  std::size_t n = m.rows(), cols = m.cols();
  if (cols < n) throw InputError("maximal minors need at least as many columns as rows");
  BiDeg row_sum;
  for (auto d : m.row_degrees()) row_sum += d;
  std::vector<Minor> out;
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  for (;;) {
    Minor minor;
    minor.label.columns = pick;
    BiDeg deg;
    for (auto c : pick) {
      deg += m.col_degrees()[c];
      if (c >= m.syzygy_columns()) minor.label.f_mask |= 1u << (c - m.syzygy_columns());
    }
    minor.label.degree = deg - row_sum;
    std::vector<std::vector<BiPoly>> sub(n, std::vector<BiPoly>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sub[j][k] = m.at(j, pick[k]);
    minor.value = cofactor_det(sub);
    out.push_back(std::move(minor));
    // Advance to the next n-subset in lexicographic order.
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == cols - n + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t l = k; l < n; ++l) pick[l] = pick[l - 1] + 1;
  }
  return out;
}

std::size_t theta_column_count(const std::vector<MinorLabel>& minors, BiDeg nu) {
  std::size_t total = 0;
  for (const auto& l : minors) total += monomial_basis(nu - l.degree).size();
  return total;
}

ThetaStrand theta(const std::vector<Minor>& minors, BiDeg nu) {
  ThetaStrand t;
  t.nu = nu;
  t.rows = monomial_basis(nu);
  for (const auto& mi : minors) t.minors.push_back(mi.label);
  const std::size_t nrows = t.rows.size();
  for (std::size_t k = 0; k < minors.size(); ++k) {
    for (const auto& m : monomial_basis(nu - minors[k].label.degree)) {
      std::vector<OuterPoly> col(nrows);
      for (const auto& [pm, c] : minors[k].value.terms()) col[basis_index(pm * m)] = c;
      t.columns.push_back({k, m});
      t.entries.push_back(std::move(col));
    }
  }
  return t;
}

ThetaStrand theta(const BigradedMatrix& m, BiDeg nu) { return theta(maximal_minors(m), nu); }

}  // namespace bires
