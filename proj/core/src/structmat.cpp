#include "bires/structmat.hpp"

#include <algorithm>

#include "bires/error.hpp"

namespace bires {

namespace {

BiDeg require_bidegree(const BiPoly& p, const char* what) {
  if (p.is_zero()) throw InputError(std::string(what) + " must be nonzero");
  auto d = bidegree_of(p);
  if (!d) throw InputError(std::string(what) + " is not bihomogeneous");
  return *d;
}

}  // namespace

BigradedMatrix::BigradedMatrix(std::vector<std::vector<BiPoly>> entries, std::vector<BiDeg> row_degrees,
                               std::vector<BiDeg> col_degrees, std::size_t syzygy_columns)
    : entries_(std::move(entries)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      syzygy_columns_(syzygy_columns) {
  if (entries_.size() != row_degrees_.size()) throw InputError("matrix row count does not match its row degrees");
  if (syzygy_columns_ > col_degrees_.size()) throw InputError("syzygy column count exceeds the column count");
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j].size() != col_degrees_.size())
      throw InputError("matrix row " + std::to_string(j) + " has the wrong length");
    for (std::size_t i = 0; i < col_degrees_.size(); ++i) {
      const BiPoly& e = entries_[j][i];
      if (e.is_zero()) continue;
      BiDeg want = col_degrees_[i] - row_degrees_[j];
      auto have = bidegree_of(e);
      if (!have || *have != want)
        throw InputError("entry (" + std::to_string(j) + "," + std::to_string(i) + ") should have bidegree " +
                         to_string(want) + (have ? " but has " + to_string(*have) : " but is inhomogeneous"));
    }
  }
}

BigradedMatrix BigradedMatrix::with_inferred_columns(std::vector<std::vector<BiPoly>> entries,
                                                     std::vector<BiDeg> row_degrees) {
  if (entries.size() != row_degrees.size() || entries.empty()) throw InputError("matrix row count mismatch");
  std::size_t cols = entries[0].size();
  std::vector<BiDeg> col_degrees(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < entries.size() && !found; ++j) {
      if (entries[j].size() != cols) throw InputError("ragged matrix");
      if (entries[j][i].is_zero()) continue;
      col_degrees[i] = require_bidegree(entries[j][i], "matrix entry") + row_degrees[j];
      found = true;
    }
    if (!found) throw InputError("matrix column " + std::to_string(i) + " is zero");
  }
  return BigradedMatrix(std::move(entries), std::move(row_degrees), std::move(col_degrees));
}

BigradedMatrix koszul_phi(const BiPoly& g1, const BiPoly& g2) {
  BiDeg d1 = require_bidegree(g1, "generator g1");
  BiDeg d2 = require_bidegree(g2, "generator g2");
  return BigradedMatrix({{-g2}, {g1}}, {d1, d2}, {d1 + d2}, 1);
}

GSpec GSpec::complete_intersection(const BiPoly& g1, const BiPoly& g2) {
  GSpec g;
  g.generators_ = {g1, g2};
  g.degrees_ = {require_bidegree(g1, "generator g1"), require_bidegree(g2, "generator g2")};
  g.phi_ = koszul_phi(g1, g2);
  g.kind_ = Kind::CompleteIntersection;
  return g;
}

GSpec GSpec::with_syzygies(std::vector<BiPoly> generators, BigradedMatrix phi) {
  if (generators.size() < 2) throw InputError("at least two generators are required");
  GSpec g;
  for (std::size_t j = 0; j < generators.size(); ++j)
    g.degrees_.push_back(require_bidegree(generators[j], ("generator g" + std::to_string(j + 1)).c_str()));
  if (phi.rows() != generators.size()) throw InputError("syzygy matrix needs one row per generator");
  if (phi.row_degrees() != g.degrees_) throw InputError("syzygy matrix row degrees differ from generator degrees");
  if (phi.cols() == 0) throw InputError("syzygy matrix has no columns");
  for (std::size_t i = 0; i < phi.cols(); ++i) {
    BiPoly sum;
    for (std::size_t j = 0; j < generators.size(); ++j) sum += generators[j] * phi.at(j, i);
    if (!sum.is_zero()) throw InputError("column " + std::to_string(i) + " of the syzygy matrix is not a syzygy");
  }
  g.generators_ = std::move(generators);
  g.phi_ = BigradedMatrix(phi.entries(), phi.row_degrees(), phi.col_degrees(), phi.cols());
  g.kind_ = Kind::UserHilbertBurch;
  return g;
}

OuterRing generic_coefficient_ring(const std::vector<BiDeg>& generator_degrees, const std::array<BiDeg, 3>& fdegs) {
  std::vector<OuterVar> vars;
  for (int i = 0; i < 3; ++i) {
    const BiDeg f = fdegs[static_cast<std::size_t>(i)];
    if (std::none_of(generator_degrees.begin(), generator_degrees.end(), [&](BiDeg d) { return f.geq(d); }))
      throw InputError("F-degree " + to_string(f) + " is below every generator degree, so F_" + std::to_string(i) +
                       " would vanish");
    for (std::size_t j = 0; j < generator_degrees.size(); ++j) {
      // Generators of too high degree contribute no coefficients.
      std::size_t count = monomial_basis(f - generator_degrees[j]).size();
      for (std::size_t a = 0; a < count; ++a)
        vars.push_back({OuterVar::Kind::Coeff, i, static_cast<int>(j + 1), static_cast<int>(a)});
    }
  }
  return OuterRing(std::move(vars));
}

PsiBuild build_psi_generic(const GSpec& g, const std::array<BiDeg, 3>& fdegs) {
  PsiBuild out;
  out.ring = generic_coefficient_ring(g.degrees(), fdegs);
  std::size_t n = g.size();
  std::vector<std::vector<BiPoly>> psi(n, std::vector<BiPoly>(3));
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BiPoly h;
      for (const auto& m : monomial_basis(fdegs[i] - g.degrees()[j]))
        h += BiPoly::monomial(m, OuterPoly::variable(next++));
      psi[j][i] = h;
      out.f[i] += g.generators()[j] * h;
    }
  }
  out.psi = BigradedMatrix(std::move(psi), g.degrees(), {fdegs[0], fdegs[1], fdegs[2]});
  return out;
}

PsiBuild build_psi_implicit(const GSpec& g, const BigradedMatrix& h) {
  std::size_t n = g.size();
  if (h.rows() != n || h.cols() != 4) throw InputError("h must be an n x 4 matrix");
  if (h.row_degrees() != g.degrees()) throw InputError("h row degrees differ from generator degrees");
  BiDeg ab = h.col_degrees()[0];
  for (auto d : h.col_degrees())
    if (d != ab) throw InputError("h columns have inconsistent degrees");
  PsiBuild out;
  out.ring = OuterRing::implicit();
  out.ab = ab;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.p[i] += g.generators()[j] * h.at(j, i);
    if (out.p[i].is_zero()) throw InputError("parametrization component p_" + std::to_string(i) + " is zero");
  }
  std::vector<std::vector<BiPoly>> psi(n, std::vector<BiPoly>(3));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < 3; ++i) psi[j][i] = h.at(j, i) - h.at(j, 3).scaled(OuterPoly::variable(i));
  for (std::size_t i = 0; i < 3; ++i) out.f[i] = out.p[i] - out.p[3].scaled(OuterPoly::variable(i));
  out.psi = BigradedMatrix(std::move(psi), g.degrees(), {ab, ab, ab});
  return out;
}

BigradedMatrix augment(const BigradedMatrix& phi, const BigradedMatrix& psi) {
  if (psi.cols() == 0) return phi;
  if (phi.rows() != psi.rows() || phi.row_degrees() != psi.row_degrees())
    throw InputError("cannot augment matrices with different rows");
  auto entries = phi.entries();
  for (std::size_t j = 0; j < entries.size(); ++j)
    entries[j].insert(entries[j].end(), psi.entries()[j].begin(), psi.entries()[j].end());
  auto cols = phi.col_degrees();
  cols.insert(cols.end(), psi.col_degrees().begin(), psi.col_degrees().end());
  return BigradedMatrix(std::move(entries), phi.row_degrees(), std::move(cols), phi.cols());
}

bool verify_factorization(const GSpec& g, const BigradedMatrix& m, const std::array<BiPoly, 3>& f) {
  if (m.rows() != g.size() || m.cols() < 3) return false;
  std::size_t lead = m.cols() - 3;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    BiPoly sum;
    for (std::size_t j = 0; j < m.rows(); ++j) sum += g.generators()[j] * m.at(j, i);
    const BiPoly want = i < lead ? BiPoly() : f[i - lead];
    if (sum != want) return false;
  }
  return true;
}

int ci_multiplicity(const GSpec& g) {
  if (g.kind() != GSpec::Kind::CompleteIntersection)
    throw InputError("base-point multiplicity must be supplied for non complete intersections");
  const auto& d = g.degrees();
  return d[0].x * d[1].y + d[1].x * d[0].y;
}

DegreeData degree_data(const GSpec& g, const std::array<BiDeg, 3>& fdegs) {
  return {g.degrees(), g.phi().col_degrees(), {fdegs[0], fdegs[1], fdegs[2]}};
}

}  // namespace bires
