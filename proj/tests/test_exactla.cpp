#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bires/error.hpp"
#include "support.hpp"

using namespace bires;
using namespace bires::test;

namespace {

const OuterRing kImp = OuterRing::implicit();
OuterPoly O(const char* s) { return parse_outer(s, kImp); }

ThetaStrand strand_of(const std::string& fixture_name, BiDeg nu) {
  auto p = load_problem(fixture_name);
  return implicit_strand(p.g, *p.h, nu).theta;
}

/// Rank by plain Gauss-Jordan over Q.
std::size_t naive_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Leibniz expansion over all permutations.
OuterPoly leibniz(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  OuterPoly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    OuterPoly term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][p[i]];
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

PolyMatrix random_poly_matrix(Rng& rng, std::size_t n, int zero_percent) {
  PolyMatrix m(n, std::vector<OuterPoly>(n));
  for (auto& row : m)
    for (auto& e : row)
      if (rng.uniform(1, 100) > zero_percent) e = random_outer(rng, 3, rng.uniform(1, 2), 1);
  return m;
}

}  // namespace

TEST(Specialize, Polynomials) {
  Assignment a{Rat(2), Rat(3), std::nullopt, std::nullopt};
  EXPECT_EQ(specialize(OuterPoly(Rat(3, 2)), a), Rat(3, 2));
  EXPECT_EQ(specialize(O("X*Y - 1"), a), Rat(5));
}

TEST(Specialize, RandomAssignmentIsDeterministic) {
  auto a = random_assignment(kImp, 42), b = random_assignment(kImp, 42), c = random_assignment(kImp, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& v : a) {
    ASSERT_TRUE(v);
    EXPECT_LE(abs(*v), Rat(10000));
  }
}

TEST(Specialize, PointOnSurfaceDropsRank) {
  auto t = strand_of("ex63.json", {3, 0});
  Rat y(7, 3), z(-5, 2);
  QMatrix on = specialize(t, {y * z, y, z, std::nullopt});
  EXPECT_EQ(rank_profile(on).rank, 3u);
  QMatrix off = specialize(t, {y * z + 1, y, z, std::nullopt});
  EXPECT_EQ(rank_profile(off).rank, 4u);
}

TEST(RankProfileTest, Trivial) {
  QMatrix id(3, 3);
  for (std::size_t k = 0; k < 3; ++k) id.at(k, k) = 1;
  auto p = rank_profile(id);
  EXPECT_EQ(p.rank, 3u);
  EXPECT_EQ(p.cols, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(rank_profile(QMatrix(4, 5)).rank, 0u);
}

TEST(RankProfileTest, MatchesNaiveOracle) {
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 12)), cols = static_cast<std::size_t>(rng.uniform(1, 12));
    std::size_t inner = static_cast<std::size_t>(rng.uniform(1, 12));
    // Product of random factors gives controlled rank deficiency.
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(inner)), b(inner, std::vector<Rat>(cols));
    for (auto& r : a)
      for (auto& e : r) e = rng.uniform(0, 3) ? rng.rat() : Rat(0);
    for (auto& r : b)
      for (auto& e : r) e = rng.uniform(0, 3) ? rng.rat() : Rat(0);
    QMatrix m(rows, cols);
    std::vector<std::vector<Rat>> dense_m(rows, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Rat s = 0;
        for (std::size_t i = 0; i < inner; ++i) s += a[r][i] * b[i][c];
        m.at(r, c) = dense_m[r][c] = s;
      }
    auto p = rank_profile(m);
    ASSERT_EQ(p.rank, naive_rank(dense_m));
    // The reported rows and columns carry a nonsingular submatrix.
    EXPECT_EQ(naive_rank([&] {
                std::vector<std::vector<Rat>> sub;
                for (auto r : p.rows) {
                  std::vector<Rat> line;
                  for (auto c : p.cols) line.push_back(dense_m[r][c]);
                  sub.push_back(line);
                }
                return sub;
              }()),
              p.rank);
  }
}

TEST(RankProfileTest, Example64Corank) {
  auto t = strand_of("ex64.json", {3, 2});
  ASSERT_EQ(t.row_count(), 12u);
  for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_EQ(rank_profile(specialize(t, random_assignment(kImp, seed))).rank, 11u);
}

TEST(Det, SmallCases) {
  EXPECT_EQ(det_ff({{O("X + 1")}}), O("X + 1"));
  EXPECT_EQ(det_ff({{O("X"), 0, 0}, {0, O("Y"), 0}, {0, 0, O("Z")}}), O("X*Y*Z"));
  EXPECT_EQ(det_ff({}), OuterPoly(1));
  EXPECT_THROW(det_ff({{O("X"), O("Y")}}), InputError);
}

TEST(Det, MatchesOracles) {
  Rng rng(42);
  for (int k = 0; k < 60; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    PolyMatrix m = random_poly_matrix(rng, n, rng.uniform(0, 60));
    OuterPoly d = det_ff(m);
    EXPECT_EQ(d, det_cofactor(m)) << "n=" << n;
    EXPECT_EQ(dense(d), dense(leibniz(m))) << "n=" << n;
  }
}

TEST(Det, SingularBareissPath) {
  Rng rng(43);
  PolyMatrix m = random_poly_matrix(rng, 6, 20);
  m[4] = m[1];
  EXPECT_TRUE(det_ff(m).is_zero());
  for (std::size_t r = 0; r < 6; ++r) m[r][5] = m[r][0] * O("X") - m[r][2];
  EXPECT_TRUE(det_ff(m).is_zero());
}

TEST(Det, Example63Minor) {
  auto t = strand_of("ex63.json", {3, 0});
  OuterPoly d = det_ff(theta_submatrix(t, {0, 2, 4, 5}));
  ASSERT_FALSE(d.is_zero());
  auto q = divides(O("Y*Z - X"), d);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->size(), 1u);  // unit or monomial cofactor
}

TEST(Gcd, Examples) {
  OuterPoly p = O("2*X*Y - 4*Z");
  EXPECT_EQ(gcd_multi({p, p}), normalize(p));
  EXPECT_EQ(normalize(p), O("X*Y - 2*Z"));
  EXPECT_EQ(gcd_multi({O("X*(Y*Z - X)"), O("Y*(Y*Z - X)")}), O("X - Y*Z"));
  EXPECT_EQ(gcd_multi({O("X^2 - Y^2"), O("X^2 + 2*X*Y + Y^2")}), O("X + Y"));
  EXPECT_EQ(gcd_multi({O("X"), OuterPoly()}), O("X"));
  EXPECT_EQ(gcd_multi({O("X + 1"), O("X - 1")}), OuterPoly(1));
  EXPECT_THROW(gcd_multi({OuterPoly(), OuterPoly()}), MathError);
  EXPECT_EQ(normalize(O("-3/4*X + 1/2")), O("3*X - 2"));
}

TEST(Gcd, IntegerContent) {
  IntPoly a = to_int_poly(O("6*X*Y + 6")), b = to_int_poly(O("4*X*Y + 4"));
  EXPECT_EQ(gcd(a, b), to_int_poly(O("2*X*Y + 2")));
}

TEST(Gcd, DividesInputs) {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    OuterPoly common = k % 3 ? random_outer(rng, 4, rng.uniform(1, 3), 2) : OuterPoly(1);
    OuterPoly a = random_outer(rng, 4, rng.uniform(1, 4), 2) * common;
    OuterPoly b = random_outer(rng, 4, rng.uniform(1, 4), 2) * common;
    OuterPoly g = gcd_multi({a, b});
    ASSERT_FALSE(g.is_zero());
    EXPECT_TRUE(divides(g, a)) << to_string(a, kImp) << " / " << to_string(g, kImp);
    EXPECT_TRUE(divides(g, b));
    EXPECT_TRUE(divides(normalize(common), g));
    // Evaluation spot check: the quotients evaluate consistently at a random point.
    auto pt = random_assignment(kImp, static_cast<std::uint64_t>(k));
    Rat gv = specialize(g, pt);
    EXPECT_EQ(specialize(*divides(g, a), pt) * gv, specialize(a, pt));
    EXPECT_EQ(specialize(*divides(g, b), pt) * gv, specialize(b, pt));
  }
}

TEST(Gcd, RecoversCommonFactor) {
  Rng rng(45);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    OuterPoly a = random_outer(rng, 4, rng.uniform(1, 3), 2), b = random_outer(rng, 4, rng.uniform(1, 3), 2);
    if (gcd_multi({a, b}) != OuterPoly(1)) continue;
    OuterPoly g = random_outer(rng, 4, rng.uniform(1, 3), 2);
    if (g.is_zero()) continue;
    EXPECT_EQ(gcd_multi({g * a, g * b}), normalize(g));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Divides, Examples) {
  auto q = divides(O("Y*Z - X"), O("X*(Y*Z - X)"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, O("X"));
  EXPECT_FALSE(divides(O("Y*Z - X"), O("Y*Z + X")));
  EXPECT_THROW(divides(OuterPoly(), O("X")), MathError);
}

TEST(SelectMinor, Example63Block0) {
  auto t = strand_of("ex63.json", {3, 0});
  auto cols = select_minor_by_block(t, kImp, 0, 4, 7);
  ASSERT_EQ(cols.size(), 4u);
  OuterPoly d = det_ff(theta_submatrix(t, cols));
  EXPECT_FALSE(d.is_zero());
  EXPECT_TRUE(divides(O("Y*Z - X"), d));
}

TEST(SelectMinor, FullRankSquare) {
  auto t = strand_of("ex65.json", {2, 3});
  ASSERT_EQ(t.row_count(), 12u);
  ASSERT_EQ(t.col_count(), 12u);
  std::vector<std::size_t> all(12);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(select_minor_by_block(t, kImp, i, 12, 5), all);
}

TEST(SelectMinor, RankDefectThrows) {
  auto t = strand_of("ex64.json", {3, 2});
  EXPECT_THROW(select_minor_by_block(t, kImp, 0, 12, 5), MathError);
}

TEST(SelectMinor, AvoidingColumnsComeFirst) {
  auto p = load_problem("ex61.json");
  auto s = resultant_strand(p.g, *p.fdegs, BiDeg{2, 2});
  for (int i = 0; i < 3; ++i) {
    auto cols = select_minor_by_block(s.theta, s.ring, i, 9, 11);
    std::size_t avoiding = 0;
    for (auto c : cols) avoiding += s.theta.label(c).involves_f(i) ? 0 : 1;
    // dim R_nu - N_i = 9 - 1 columns avoid block i.
    EXPECT_EQ(avoiding, 8u);
    OuterPoly d = det_ff(theta_submatrix(s.theta, cols));
    EXPECT_EQ(d.degree_in(s.ring.block_vars(i)), 1u);
  }
}
