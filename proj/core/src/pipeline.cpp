#include "bires/pipeline.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "bires/error.hpp"

namespace bires {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined input.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::array<int, 3> coeff_degrees(const std::array<BiDeg, 3>& f, int sum_mult) {
  std::array<int, 3> n{f[1].x * f[2].y + f[1].y * f[2].x - sum_mult, f[0].x * f[2].y + f[0].y * f[2].x - sum_mult,
                       f[0].x * f[1].y + f[0].y * f[1].x - sum_mult};
  for (int i = 0; i < 3; ++i)
    if (n[static_cast<std::size_t>(i)] < 0)
      throw InputError("coefficient degree N_" + std::to_string(i) + " = " + std::to_string(n[static_cast<std::size_t>(i)]) +
                       " is negative: F-degrees are too low for base-point multiplicity " + std::to_string(sum_mult));
  return n;
}

int surface_degree(int a, int b, int sum_mult) {
  int d = 2 * a * b - sum_mult;
  if (d < 0)
    throw InputError("surface degree 2ab - sum = " + std::to_string(d) + " is negative for (a,b)=(" + std::to_string(a) +
                     "," + std::to_string(b) + ")");
  return d;
}

std::vector<std::string> degree_inequality_warnings(const GSpec& g, const std::array<BiDeg, 3>& fdegs) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 3; ++i) {
    bool first = false, second = false;
    for (auto d : g.degrees()) {
      first = first || fdegs[i].geq(d + BiDeg{1, 0});
      second = second || fdegs[i].geq(d + BiDeg{0, 1});
    }
    if (!first || !second)
      out.push_back("F-degree " + to_string(fdegs[i]) + " of F_" + std::to_string(i) +
                    " misses the existence inequalities for the residual resultant; continuing");
  }
  return out;
}

OuterPoly homogenize(const OuterPoly& h, int total_degree) {
  constexpr std::size_t kW = 3;
  std::vector<OuterPoly::Term> terms;
  for (const auto& t : h.terms()) {
    int d = static_cast<int>(t.mono.total_degree());
    if (d > total_degree)
      throw InputError("cannot homogenize to degree " + std::to_string(total_degree) + ": a term has degree " +
                       std::to_string(d));
    OuterMonomial m = t.mono;
    m.set_exponent(kW, m.exponent(kW) + static_cast<unsigned>(total_degree - d));
    terms.push_back({m, t.coeff});
  }
  return OuterPoly::from_terms(std::move(terms));
}

namespace {

StrandSetup build_strand(const GSpec& g, const PsiBuild& psi, const std::array<BiDeg, 3>& fdegs,
                    const std::optional<BiDeg>& nu_override) {
  BigradedMatrix m = augment(g.phi(), psi.psi);
  if (!verify_factorization(g, m, psi.f)) throw MathError("internal error: [g]*(phi|Psi) does not reproduce F");
  StrandSetup s;
  s.ring = psi.ring;
  s.region = en_region(degree_data(g, fdegs));
  auto minors = maximal_minors(m);
  std::optional<BiDeg> lo, hi;
  for (const auto& mi : minors) {
    if (mi.value.is_zero()) continue;
    BiDeg d = mi.label.degree;
    lo = lo ? BiDeg{std::min(lo->x, d.x), std::min(lo->y, d.y)} : d;
    hi = hi ? BiDeg{std::max(hi->x, d.x), std::max(hi->y, d.y)} : d;
  }
  if (!hi) throw MathError("every maximal minor of (phi|Psi) vanishes");
  s.nu = choose_nu(s.region, *lo, *hi, nu_override);
  s.theta = theta(minors, s.nu.nu);
  if (s.theta.row_count() == 0 || s.theta.col_count() == 0)
    throw MathError("strand at nu=" + to_string(s.nu.nu) + " is empty (" + std::to_string(s.theta.row_count()) + "x" +
                    std::to_string(s.theta.col_count()) + ")");
  return s;
}

/// Rank at generic points; two seeds must agree, otherwise a third arbitrates and the
/// largest value wins since rank only drops on special points.
std::size_t generic_rank(const ThetaStrand& t, const OuterRing& ring, std::uint64_t seed,
                         std::vector<std::string>& warnings) {
  std::size_t r1 = rank_profile(specialize(t, random_assignment(ring, derive_seed(seed, 1)))).rank;
  std::size_t r2 = rank_profile(specialize(t, random_assignment(ring, derive_seed(seed, 2)))).rank;
  if (r1 == r2) return r1;
  std::size_t r3 = rank_profile(specialize(t, random_assignment(ring, derive_seed(seed, 3)))).rank;
  warnings.push_back("rank disagreed between random specializations (" + std::to_string(r1) + ", " +
                     std::to_string(r2) + ", " + std::to_string(r3) + ")");
  return std::max({r1, r2, r3});
}

struct BlockDets {
  std::array<OuterPoly, 3> dets;
  std::array<std::size_t, 3> avoiding{};
  int retries = 0;
};

BlockDets block_determinants(const ThetaStrand& t, const OuterRing& ring, std::uint64_t seed,
                             const std::optional<std::array<int, 3>>& expected, int max_retries) {
  BlockDets out;
  std::array<int, 3> retries{};
  auto one = [&](int i) {
    const auto block = ring.block_vars(i);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
      auto cols = select_minor_by_block(t, ring, i, t.row_count(),
                                        derive_seed(seed, 100 + 10 * static_cast<std::uint64_t>(attempt) + static_cast<std::uint64_t>(i)),
                                        attempt > 0);
      OuterPoly d = det_ff(theta_submatrix(t, cols));
      bool ok = !d.is_zero();
      if (ok && expected) ok = static_cast<int>(d.degree_in(block)) == (*expected)[static_cast<std::size_t>(i)];
      if (ok) {
        std::size_t avoid = 0;
        for (auto c : cols) avoid += t.label(c).involves_f(i) ? 0 : 1;
        out.avoiding[static_cast<std::size_t>(i)] = avoid;
        retries[static_cast<std::size_t>(i)] = attempt;
        return d;
      }
    }
    throw MathError("no maximal minor of the strand has the predicted degree in block " + std::to_string(i) +
                    " after " + std::to_string(max_retries + 1) + " attempts");
  };
  std::array<std::future<OuterPoly>, 3> jobs;
  for (int i = 0; i < 3; ++i) jobs[static_cast<std::size_t>(i)] = std::async(std::launch::async, one, i);
  for (std::size_t i = 0; i < 3; ++i) out.dets[i] = jobs[i].get();
  out.retries = retries[0] + retries[1] + retries[2];
  return out;
}

void fill_block_degrees(ResultReport& r) {
  for (int i = 0; i < 3; ++i)
    r.block_degrees[static_cast<std::size_t>(i)] = static_cast<int>(r.result.degree_in(r.ring.block_vars(i)));
  r.total_degree = static_cast<int>(r.result.total_degree());
}

}  // namespace

StrandSetup resultant_strand(const GSpec& g, const std::array<BiDeg, 3>& fdegs, const std::optional<BiDeg>& nu) {
  return build_strand(g, build_psi_generic(g, fdegs), fdegs, nu);
}

StrandSetup implicit_strand(const GSpec& g, const BigradedMatrix& h, const std::optional<BiDeg>& nu) {
  PsiBuild psi = build_psi_implicit(g, h);
  return build_strand(g, psi, {psi.ab, psi.ab, psi.ab}, nu);
}

ResultReport residual_resultant(const GSpec& g, const std::array<BiDeg, 3>& fdegs, const PipelineOptions& opt) {
  ResultReport r;
  r.mode = Mode::Resultant;
  r.seed = opt.seed;
  if (opt.sum_mult) {
    r.sum_mult = *opt.sum_mult;
  } else if (g.kind() == GSpec::Kind::CompleteIntersection) {
    r.sum_mult = ci_multiplicity(g);
  } else {
    throw InputError("the base-point multiplicity sum must be supplied for a user syzygy matrix");
  }
  auto n = coeff_degrees(fdegs, r.sum_mult);
  r.predicted_coeff_degrees = n;
  r.warnings = degree_inequality_warnings(g, fdegs);

  PsiBuild psi = build_psi_generic(g, fdegs);
  r.ring = psi.ring;
  StrandSetup s = build_strand(g, psi, fdegs, opt.nu);
  r.region = s.region;
  r.nu = s.nu.nu;
  r.nu_from_override = s.nu.from_override;
  if (s.nu.warning) r.warnings.push_back(*s.nu.warning);
  r.theta_rows = s.theta.row_count();
  r.theta_cols = s.theta.col_count();

  std::size_t rank = generic_rank(s.theta, r.ring, opt.seed, r.warnings);
  if (rank < r.theta_rows)
    throw MathError("strand at nu=" + to_string(r.nu) + " has generic rank " + std::to_string(rank) + " < " +
                    std::to_string(r.theta_rows) + " rows; the regularity estimate or the local complete intersection hypothesis fails");

  BlockDets dets = block_determinants(s.theta, r.ring, opt.seed, n, opt.max_retries);
  r.avoiding_columns = dets.avoiding;
  r.retries = dets.retries;
  r.result = gcd_multi({dets.dets[0], dets.dets[1], dets.dets[2]});
  fill_block_degrees(r);
  for (std::size_t i = 0; i < 3; ++i)
    if (r.block_degrees[i] != n[i])
      throw MathError("resultant has degree " + std::to_string(r.block_degrees[i]) + " in block " + std::to_string(i) +
                      " but " + std::to_string(n[i]) + " was predicted");
  return r;
}

FallbackResult fallback_submaximal(const ThetaStrand& t, const OuterRing& ring, std::size_t corank, std::uint64_t seed,
                                   int budget) {
  if (corank == 0) throw MathError("fallback requested for a strand of full rank; use the main path");
  if (corank >= t.row_count()) throw MathError("strand vanishes identically at a generic point");
  const std::size_t size = t.row_count() - corank;
  QMatrix q = specialize(t, random_assignment(ring, seed));
  if (rank_profile(q).rank != size) throw MathError("specialized strand rank does not match the stated corank");

  RandomRationals rng(derive_seed(seed, 7));
  auto permutation = [&](std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k;
    for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.next_raw() % k]);
    return p;
  };
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  std::vector<OuterPoly> minors;
  const int max_attempts = 50 * std::max(budget, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(minors.size()) < budget; ++attempt) {
    auto rp = permutation(t.row_count()), cp = permutation(t.col_count());
    RankProfile prof = rank_profile(q.select(rp, cp));
    std::vector<std::size_t> rows, cols;
    for (auto k : prof.rows) rows.push_back(rp[k]);
    for (auto k : prof.cols) cols.push_back(cp[k]);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (!seen.insert({rows, cols}).second) continue;
    PolyMatrix sub(size, std::vector<OuterPoly>(size));
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) sub[a][b] = t.at(rows[a], cols[b]);
    OuterPoly d = det_ff(sub);
    if (!d.is_zero()) minors.push_back(std::move(d));
  }
  if (minors.empty()) throw MathError("no nonsingular submaximal minor found within the sampling budget");
  return {gcd_multi(minors), minors.size()};
}

ResultReport implicitize(const GSpec& g, const BigradedMatrix& h, const PipelineOptions& opt) {
  ResultReport r;
  r.mode = Mode::Implicitize;
  r.seed = opt.seed;
  PsiBuild psi = build_psi_implicit(g, h);
  r.ring = psi.ring;
  const std::array<BiDeg, 3> fdegs{psi.ab, psi.ab, psi.ab};
  r.warnings = degree_inequality_warnings(g, fdegs);
  if (opt.sum_mult) {
    r.sum_mult = *opt.sum_mult;
    r.predicted_surface_degree = surface_degree(psi.ab.x, psi.ab.y, r.sum_mult);
  } else if (g.kind() == GSpec::Kind::CompleteIntersection) {
    r.sum_mult = ci_multiplicity(g);
    r.predicted_surface_degree = surface_degree(psi.ab.x, psi.ab.y, r.sum_mult);
  }

  StrandSetup s = build_strand(g, psi, fdegs, opt.nu);
  r.region = s.region;
  r.nu = s.nu.nu;
  r.nu_from_override = s.nu.from_override;
  if (s.nu.warning) r.warnings.push_back(*s.nu.warning);
  r.theta_rows = s.theta.row_count();
  r.theta_cols = s.theta.col_count();

  std::size_t rank = generic_rank(s.theta, r.ring, opt.seed, r.warnings);
  r.corank = r.theta_rows - rank;
  if (r.corank == 0) {
    BlockDets dets = block_determinants(s.theta, r.ring, opt.seed, std::nullopt, opt.max_retries);
    r.avoiding_columns = dets.avoiding;
    r.retries = dets.retries;
    r.result = gcd_multi({dets.dets[0], dets.dets[1], dets.dets[2]});
  } else {
    r.fallback = true;
    r.multiple_of_implicit_equation = true;
    FallbackResult fb = fallback_submaximal(s.theta, r.ring, r.corank, derive_seed(opt.seed, 1), opt.fallback_budget);
    r.fallback_minors = fb.minors_used;
    r.result = fb.multiple;
    if (r.predicted_surface_degree && opt.sum_mult) {
      // Peel single-variable factors while the degree exceeds the prediction.
      bool progress = true;
      while (progress && static_cast<int>(r.result.total_degree()) > *r.predicted_surface_degree) {
        progress = false;
        for (std::size_t v = 0; v < 4 && !progress; ++v) {
          if (auto q = divides(OuterPoly::variable(v), r.result)) {
            r.result = normalize(*q);
            r.removed_factors.push_back(r.ring.var(v).name());
            progress = true;
          }
        }
      }
    }
  }
  if (r.result.is_constant())
    throw MathError("the computed implicit equation is constant; the parametrization may be degenerate");
  fill_block_degrees(r);
  r.homogenized = homogenize(r.result, r.total_degree);
  if (r.predicted_surface_degree && r.total_degree != *r.predicted_surface_degree)
    r.warnings.push_back("implicit equation has degree " + std::to_string(r.total_degree) + ", predicted " +
                         std::to_string(*r.predicted_surface_degree));
  return r;
}

}  // namespace bires
