#include "bires/exactla.hpp"

#include <algorithm>

#include "bires/error.hpp"

namespace bires {

QMatrix QMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  QMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = at(rows[r], cols[c]);
  return out;
}

Assignment random_assignment(const OuterRing& ring, std::uint64_t seed) {
  RandomRationals rng(seed);
  Assignment a(ring.size());
  for (auto& v : a) v = rng.next();
  return a;
}

Rat specialize(const OuterPoly& p, const Assignment& a) { return evaluate(p, a); }

QMatrix specialize(const ThetaStrand& t, const Assignment& a) {
  QMatrix q(t.row_count(), t.col_count());
  for (std::size_t c = 0; c < t.col_count(); ++c)
    for (std::size_t r = 0; r < t.row_count(); ++r)
      if (!t.at(r, c).is_zero()) q.at(r, c) = evaluate(t.at(r, c), a);
  return q;
}

RankProfile rank_profile(const QMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  // Scale each row to integers; row scaling does not change the rank profile.
  std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
  }
  std::vector<std::size_t> order(nr);
  for (std::size_t r = 0; r < nr; ++r) order[r] = r;
  RankProfile out;
  Int prev = 1, t;
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc && k < nr; ++c) {
    std::size_t p = k;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[k], a[p]);
    std::swap(order[k], order[p]);
    for (std::size_t i = k + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    out.rows.push_back(order[k]);
    out.cols.push_back(c);
    ++k;
  }
  out.rank = k;
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

namespace {

template <class P>
P cofactor(const std::vector<std::vector<P>>& m, bool sparsest_row) {
  const std::size_t n = m.size();
  if (n == 0) return P(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::size_t r = 0;
  if (sparsest_row) {
    std::size_t best = n + 1;
    for (std::size_t k = 0; k < n; ++k) {
      auto nz = static_cast<std::size_t>(std::count_if(m[k].begin(), m[k].end(), [](const P& p) { return !p.is_zero(); }));
      if (nz < best) {
        best = nz;
        r = k;
      }
    }
  }
  P det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[r][c].is_zero()) continue;
    std::vector<std::vector<P>> sub;
    sub.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == r) continue;
      std::vector<P> line;
      line.reserve(n - 1);
      for (std::size_t l = 0; l < n; ++l)
        if (l != c) line.push_back(m[k][l]);
      sub.push_back(std::move(line));
    }
    P term = m[r][c] * cofactor(sub, sparsest_row);
    det = (r + c) % 2 ? det - term : det + term;
  }
  return det;
}

void require_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InputError("determinant of a non-square matrix");
}

}  // namespace

OuterPoly det_cofactor(const PolyMatrix& m) {
  require_square(m);
  return cofactor(m, false);
}

OuterPoly det_ff(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n < 5) return cofactor(m, true);
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  Int scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Int l = 1;
    for (const auto& e : m[r])
      for (const auto& t : e.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<IntPoly::Term> terms;
      for (const auto& t : m[r][c].terms()) terms.push_back({t.mono, Int(t.coeff.get_num() * (l / t.coeff.get_den()))});
      a[r][c] = IntPoly::from_sorted_terms(std::move(terms));
    }
    scale *= l;
  }
  bool negate = false;
  IntPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = n;
    for (std::size_t r = k; r < n; ++r)
      if (!a[r][k].is_zero() && (p == n || a[r][k].size() < a[p][k].size())) p = r;
    if (p == n) return {};
    if (p != k) {
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly t = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) t -= a[i][k] * a[k][j];
        if (prev.is_constant() && prev.constant_value() == 1) {
          a[i][j] = std::move(t);
        } else {
          auto q = t.divide_exact(prev);
          if (!q) throw MathError("internal error: inexact Bareiss division");
          a[i][j] = std::move(*q);
        }
      }
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  OuterPoly det = to_outer_poly(a[n - 1][n - 1]).scaled(Rat(1) / Rat(scale));
  return negate ? -det : det;
}

PolyMatrix theta_submatrix(const ThetaStrand& t, const std::vector<std::size_t>& cols) {
  PolyMatrix m(t.row_count(), std::vector<OuterPoly>(cols.size()));
  for (std::size_t r = 0; r < t.row_count(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = t.at(r, cols[c]);
  return m;
}

std::vector<std::size_t> select_minor_by_block(const ThetaStrand& t, const OuterRing& ring, int block,
                                               std::size_t target_size, std::uint64_t seed, bool shuffle) {
  QMatrix q = specialize(t, random_assignment(ring, seed));
  std::vector<std::size_t> avoid, involve;
  for (std::size_t c = 0; c < t.col_count(); ++c) (t.label(c).involves_f(block) ? involve : avoid).push_back(c);
  if (shuffle) {
    RandomRationals rng(seed ^ 0x5bd1e995u);
    for (auto* group : {&avoid, &involve})
      for (std::size_t k = group->size(); k > 1; --k) std::swap((*group)[k - 1], (*group)[rng.next_raw() % k]);
  }
  std::vector<std::size_t> order = avoid;
  order.insert(order.end(), involve.begin(), involve.end());
  std::vector<std::size_t> all_rows(t.row_count());
  for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
  RankProfile prof = rank_profile(q.select(all_rows, order));
  if (prof.rank < target_size)
    throw MathError("cannot complete a block-" + std::to_string(block) + " minor: rank " + std::to_string(prof.rank) +
                    " < " + std::to_string(target_size));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < target_size; ++k) out.push_back(order[prof.cols[k]]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OuterPoly> divides(const OuterPoly& d, const OuterPoly& p) {
  if (d.is_zero()) throw MathError("division by the zero polynomial");
  return p.divide_exact(d);
}

}  // namespace bires
