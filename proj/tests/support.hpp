#pragma once

// Helpers shared by the test suites: independent dense-polynomial oracles, random
// generators and fixture access.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bires/pipeline.hpp"
#include "problem_spec.hpp"

namespace bires::test {

/// Exponent vector (s,t,u,v, then outer variables) to coefficient; zero entries dropped.
using Dense = std::map<std::vector<unsigned>, Rat>;

inline constexpr std::size_t kOracleVars = 12;

inline Dense dense(const OuterPoly& p) {
  Dense d;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(4 + kOracleVars, 0);
    for (std::size_t v = 0; v < kOracleVars; ++v) e[4 + v] = t.mono.exponent(v);
    d[e] += t.coeff;
  }
  return d;
}

inline Dense dense(const BiPoly& p) {
  Dense d;
  for (const auto& [m, c] : p.terms())
    for (const auto& t : c.terms()) {
      std::vector<unsigned> e(4 + kOracleVars, 0);
      for (std::size_t k = 0; k < 4; ++k) e[k] = m.e[k];
      for (std::size_t v = 0; v < kOracleVars; ++v) e[4 + v] = t.mono.exponent(v);
      d[e] += t.coeff;
    }
  return d;
}

inline Dense clean(Dense d) {
  std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  return d;
}

inline Dense dense_add(const Dense& a, const Dense& b, int sign = 1) {
  Dense r = a;
  for (const auto& [e, c] : b) r[e] += sign * c;
  return clean(r);
}

/// Schoolbook product over every pair of terms.
inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r[e] += ca * cb;
    }
  return clean(r);
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  Rat rat(int bound = 9) {
    Rat r(uniform(-bound, bound), uniform(1, 4));
    r.canonicalize();  // mpq_class(num, den) does not reduce
    return r;
  }
  Rat nonzero_rat(int bound = 9) {
    Rat r;
    while ((r = rat(bound)) == 0) {
    }
    return r;
  }
};

/// Random polynomial in the first `nvars` outer variables.
inline OuterPoly random_outer(Rng& rng, std::size_t nvars, int terms, int max_exp) {
  OuterPoly p;
  for (int k = 0; k < terms; ++k) {
    OuterMonomial m;
    for (std::size_t v = 0; v < nvars; ++v) m.set_exponent(v, static_cast<unsigned>(rng.uniform(0, max_exp)));
    p += OuterPoly::monomial(m, rng.nonzero_rat());
  }
  return p;
}

/// Random bihomogeneous polynomial of bidegree d whose coefficients involve the
/// first `nvars` outer variables (constants when nvars = 0).
inline BiPoly random_bipoly(Rng& rng, BiDeg d, std::size_t nvars, int density_percent = 70) {
  BiPoly p;
  for (const auto& m : monomial_basis(d)) {
    if (rng.uniform(1, 100) > density_percent) continue;
    OuterPoly c = nvars ? random_outer(rng, nvars, rng.uniform(1, 2), 1) : OuterPoly(rng.nonzero_rat());
    p += BiPoly::monomial(m, c);
  }
  return p;
}

/// Column as text with the sign chosen so its first nonzero entry has a positive
/// leading coefficient.
inline std::string canonical_column(const std::vector<OuterPoly>& col, const OuterRing& ring) {
  bool flip = false;
  for (const auto& e : col)
    if (!e.is_zero()) {
      flip = e.leading().coeff < 0;
      break;
    }
  std::string s;
  for (const auto& e : col) s += to_string(flip ? -e : e, ring) + ";";
  return s;
}

/// Whether t equals the displayed Theta_(3,0) of the bidegree (2,1) example up to row
/// permutation, column permutation and per-column sign.
inline bool matches_ex63_display(const ThetaStrand& t) {
  const OuterRing imp = OuterRing::implicit();
  const char* expected[4][6] = {{"0", "0", "1", "0", "0", "0"},
                             {"-Y", "0", "-Z", "1", "1", "0"},
                             {"X", "-Y", "0", "-Z", "-Z", "1"},
                             {"0", "X", "0", "0", "0", "-Z"}};
  if (t.row_count() != 4 || t.col_count() != 6) return false;
  std::vector<std::string> want;
  for (int c = 0; c < 6; ++c) {
    std::vector<OuterPoly> col;
    for (int r = 0; r < 4; ++r) col.push_back(parse_outer(expected[r][c], imp));
    want.push_back(canonical_column(col, imp));
  }
  std::sort(want.begin(), want.end());
  std::vector<std::size_t> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::string> got;
    for (std::size_t c = 0; c < 6; ++c) {
      std::vector<OuterPoly> col;
      for (auto r : perm) col.push_back(t.at(r, c));
      got.push_back(canonical_column(col, imp));
    }
    std::sort(got.begin(), got.end());
    if (got == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// One random instance of the factorization identity [g]*(phi|Psi) = [0,...,0,F0,F1,F2].
/// Odd k: generic coefficients; even k: a random parametrization. The product is formed
/// here, independently of verify_factorization.
inline bool random_factorization_instance(Rng& rng, int k) {
  BiDeg d1{rng.uniform(0, 2), rng.uniform(0, 2)}, d2{rng.uniform(0, 2), rng.uniform(0, 2)};
  if (d1 == BiDeg{0, 0}) d1 = {1, 0};
  if (d2 == BiDeg{0, 0}) d2 = {0, 1};
  BiPoly g1, g2;
  while (g1.is_zero()) g1 = random_bipoly(rng, d1, 0);
  while (g2.is_zero()) g2 = random_bipoly(rng, d2, 0);
  auto g = GSpec::complete_intersection(g1, g2);
  std::array<BiDeg, 3> fdegs;
  for (auto& f : fdegs) f = {std::max(d1.x, d2.x) + rng.uniform(0, 1), std::max(d1.y, d2.y) + rng.uniform(0, 1)};
  PsiBuild psi;
  if (k % 2) {
    psi = build_psi_generic(g, fdegs);
  } else {
    BiDeg ab = fdegs[0];
    std::vector<std::vector<BiPoly>> h(2, std::vector<BiPoly>(4));
    for (std::size_t j = 0; j < 2; ++j)
      for (auto& e : h[j]) e = random_bipoly(rng, ab - g.degrees()[j], 0, 100);
    psi = build_psi_implicit(g, BigradedMatrix(h, g.degrees(), {ab, ab, ab, ab}));
    fdegs = {ab, ab, ab};
  }
  auto m = augment(g.phi(), psi.psi);
  if (m.cols() != 4) return false;
  for (std::size_t c = 0; c < 4; ++c) {
    BiPoly sum;
    for (std::size_t j = 0; j < 2; ++j) sum += g.generators()[j] * m.at(j, c);
    if (c == 0 ? !sum.is_zero() : dense(sum) != dense(psi.f[c - 1])) return false;
    if (c > 0 && !sum.is_zero() && bidegree_of(sum) != fdegs[c - 1]) return false;
  }
  return verify_factorization(g, m, psi.f);
}

inline std::string fixture(const std::string& name) { return std::string(BIRES_FIXTURES_DIR) + "/" + name; }

inline cli::Problem load_problem(const std::string& name) { return cli::build_problem(cli::load_spec(fixture(name))); }

inline OuterPoly ex64_quintic() {
  return parse_outer("X^4*Y + X^3*Y*Z + X^2*Y*Z^2 + X*Y^2*Z^2 + X*Y*Z^3 - X^4 - 2*X^2*Z^2 - Z^4", OuterRing::implicit());
}

/// True when a and b agree up to a nonzero rational factor.
inline bool equal_up_to_unit(const OuterPoly& a, const OuterPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rat f = b.leading().coeff / a.leading().coeff;
  return a.scaled(f) == b;
}

}  // namespace bires::test
