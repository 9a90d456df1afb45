#include <benchmark/benchmark.h>

#include <random>

#include "bires/pipeline.hpp"

using namespace bires;

namespace {

const OuterRing kNone;

GSpec ci(const char* a, const char* b) { return GSpec::complete_intersection(parse_poly(a, kNone), parse_poly(b, kNone)); }

BigradedMatrix ex64_h(const GSpec& g) {
  auto P = [](const char* s) { return parse_poly(s, kNone); };
  return BigradedMatrix::with_inferred_columns(
      {{P("s*u"), P("s*v"), BiPoly(), P("t*u + s*v")}, {BiPoly(), P("t*u"), P("s*u"), P("t*v")}}, g.degrees());
}

OuterPoly random_poly(std::mt19937_64& rng, std::size_t vars, int terms, int max_exp) {
  OuterPoly p;
  for (int k = 0; k < terms; ++k) {
    OuterMonomial m;
    for (std::size_t v = 0; v < vars; ++v) m.set_exponent(v, static_cast<unsigned>(rng() % static_cast<unsigned>(max_exp + 1)));
    p += OuterPoly::monomial(m, Rat(static_cast<long>(rng() % 19) - 9));
  }
  return p;
}

void BM_ThetaEx62(benchmark::State& state) {
  auto g = ci("u*v", "s");
  const std::array<BiDeg, 3> f{BiDeg{1, 2}, {1, 2}, {1, 2}};
  auto m = augment(g.phi(), build_psi_generic(g, f).psi);
  auto minors = maximal_minors(m);
  for (auto _ : state) benchmark::DoNotOptimize(theta(minors, {1, 6}));
}
BENCHMARK(BM_ThetaEx62);

void BM_DetFF(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  PolyMatrix m(n, std::vector<OuterPoly>(n));
  for (auto& row : m)
    for (auto& e : row)
      if (rng() % 3) e = random_poly(rng, 4, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_ff(m));
}
BENCHMARK(BM_DetFF)->Arg(5)->Arg(6)->Arg(7);

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(8);
  OuterPoly g = random_poly(rng, 4, 4, 2);
  OuterPoly a = g * random_poly(rng, 4, static_cast<int>(state.range(0)), 3);
  OuterPoly b = g * random_poly(rng, 4, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(3)->Arg(4)->Arg(6);

void BM_RankProfile(benchmark::State& state) {
  auto g = ci("u*v", "s");
  auto s = resultant_strand(g, {BiDeg{1, 2}, {1, 2}, {1, 2}}, BiDeg{1, 6});
  QMatrix q = specialize(s.theta, random_assignment(s.ring, 3));
  for (auto _ : state) benchmark::DoNotOptimize(rank_profile(q));
}
BENCHMARK(BM_RankProfile);

void BM_ResultantEx61(benchmark::State& state) {
  auto g = ci("s", "v");
  PipelineOptions opt;
  opt.nu = BiDeg{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(residual_resultant(g, {BiDeg{1, 1}, {1, 1}, {1, 1}}, opt));
}
BENCHMARK(BM_ResultantEx61)->Unit(benchmark::kMillisecond);

void BM_ImplicitizeEx63(benchmark::State& state) {
  auto g = ci("s*v", "t*u");
  auto P = [](const char* s) { return parse_poly(s, kNone); };
  auto h = BigradedMatrix::with_inferred_columns({{P("s"), P("t"), BiPoly(), BiPoly()}, {BiPoly(), BiPoly(), P("s"), P("t")}},
                                                 g.degrees());
  PipelineOptions opt;
  opt.nu = BiDeg{3, 0};
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(g, h, opt));
}
BENCHMARK(BM_ImplicitizeEx63)->Unit(benchmark::kMillisecond);

void BM_ImplicitizeEx64Fallback(benchmark::State& state) {
  auto g = ci("s*v", "t*u");
  auto h = ex64_h(g);
  PipelineOptions opt;
  opt.nu = BiDeg{3, 2};
  opt.sum_mult = 3;
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(g, h, opt));
}
BENCHMARK(BM_ImplicitizeEx64Fallback)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
