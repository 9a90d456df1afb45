// Multivariate gcd over Z by recursive primitive PRS.
//
// Before any content computation a modular image test bounds the degree of the gcd in
// each shared variable: reduce modulo a 64-bit prime, evaluate every other variable at a
// random point and take the univariate gcd. When the leading coefficients survive the
// evaluation, the image gcd has degree at least that of the true gcd, so an image degree
// of zero proves the gcd is free of that variable. Coprime inputs, the common case for
// contents, therefore cost a few evaluations instead of a recursion.

#include <algorithm>
#include <map>
#include <random>

#include "bires/error.hpp"
#include "bires/exactla.hpp"

namespace bires {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kPrime = 0xffffffffffffffc5ull;  // 2^64 - 59

u64 mulmod(u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % kPrime); }
u64 addmod(u64 a, u64 b) {
  u128 s = static_cast<u128>(a) + b;
  return static_cast<u64>(s >= kPrime ? s - kPrime : s);
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + kPrime - b); }
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}
u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

u64 reduce(const Int& z) {
  u64 r = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
  return r;
}

/// Degree of a univariate polynomial mod p given as dense coefficients (low to high).
int trim(std::vector<u64>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return static_cast<int>(p.size()) - 1;
}

int univariate_gcd_degree(std::vector<u64> a, std::vector<u64> b) {
  int da = trim(a), db = trim(b);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  while (db >= 0) {
    u64 inv = invmod(b.back());
    while (da >= db) {
      u64 f = mulmod(a.back(), inv);
      std::size_t shift = static_cast<std::size_t>(da - db);
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = submod(a[k + shift], mulmod(f, b[k]));
      da = trim(a);
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  return da;
}

/// Image of p in Z_p[x] with every other variable replaced by point[v].
std::vector<u64> image(const IntPoly& p, std::size_t x, const std::vector<std::vector<u64>>& powers) {
  std::vector<u64> out(p.degree(x) + 1, 0);
  for (const auto& t : p.terms()) {
    u64 val = reduce(t.coeff);
    unsigned ex = 0;
    t.mono.for_each_variable([&](std::size_t v, unsigned e) {
      if (v == x) {
        ex = e;
      } else {
        val = mulmod(val, powers[v][e]);
      }
    });
    out[ex] = addmod(out[ex], val);
  }
  return out;
}

class GcdEngine {
 public:
  GcdEngine() : rng_(0x9e3779b97f4a7c15ull) {}

  IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Int ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    OuterMonomial ma = monomial_content(a), mb = monomial_content(b);
    OuterMonomial m = OuterMonomial::gcd(ma, mb);
    IntPoly pa = strip(a, ca, ma), pb = strip(b, cb, mb);
    IntPoly g = gcd_primitive(pa, pb);
    return normalize_sign(g.times_monomial(m).scaled(c));
  }

  static IntPoly normalize_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    return p.leading().coeff < 0 ? -p : p;
  }

  static Int content(const IntPoly& p) {
    Int c = 0;
    for (const auto& t : p.terms()) {
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      if (c == 1) break;
    }
    return c;
  }

 private:
  static OuterMonomial monomial_content(const IntPoly& p) {
    OuterMonomial m = p.terms().front().mono;
    for (const auto& t : p.terms()) {
      if (m.is_one()) break;
      m = OuterMonomial::gcd(m, t.mono);
    }
    return m;
  }

  static IntPoly strip(const IntPoly& p, const Int& c, const OuterMonomial& m) {
    std::vector<IntPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Int q;
      mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      out.push_back({t.mono / m, std::move(q)});
    }
    return IntPoly::from_sorted_terms(std::move(out));
  }

  /// Coefficients of p as a polynomial in the variables of `mask`, with those variables
  /// removed. Order of the groups is irrelevant for contents.
  static std::vector<IntPoly> coefficients(const IntPoly& p, const OuterMonomial& mask) {
    std::map<OuterMonomial, std::vector<IntPoly::Term>> groups;
    for (const auto& t : p.terms()) groups[t.mono.select(mask)].push_back({t.mono.drop(mask), t.coeff});
    std::vector<IntPoly> out;
    out.reserve(groups.size());
    for (auto& [k, terms] : groups) out.push_back(IntPoly::from_sorted_terms(std::move(terms)));
    return out;
  }

  /// Dense coefficient vector in x (index = exponent).
  static std::vector<IntPoly> univariate(const IntPoly& p, std::size_t x) {
    std::vector<std::vector<IntPoly::Term>> buckets(p.degree(x) + 1);
    OuterMonomial mask = OuterMonomial::mask_of({x});
    for (const auto& t : p.terms()) buckets[t.mono.exponent(x)].push_back({t.mono.drop(mask), t.coeff});
    std::vector<IntPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(IntPoly::from_sorted_terms(std::move(b)));
    return out;
  }

  static IntPoly from_univariate(const std::vector<IntPoly>& u, std::size_t x) {
    IntPoly out;
    for (std::size_t d = 0; d < u.size(); ++d)
      if (!u[d].is_zero()) out += d ? u[d].times_monomial(OuterMonomial::variable(x, static_cast<unsigned>(d))) : u[d];
    return out;
  }

  /// Gcd of a list; stops early at 1. Zero polynomials are skipped.
  IntPoly gcd_list(std::vector<IntPoly> ps) {
    ps.erase(std::remove_if(ps.begin(), ps.end(), [](const IntPoly& p) { return p.is_zero(); }), ps.end());
    if (ps.empty()) return {};
    std::sort(ps.begin(), ps.end(), [](const IntPoly& a, const IntPoly& b) { return a.size() < b.size(); });
    IntPoly g = normalize_sign(ps[0]);
    for (std::size_t k = 1; k < ps.size(); ++k) {
      if (g.is_constant() && abs(g.constant_value()) == 1) break;
      g = gcd(g, ps[k]);
    }
    return g;
  }

  /// Content with respect to the variables of `mask`, computed on a polynomial without
  /// integer or monomial content. A monomial coefficient then forces content 1.
  IntPoly content_in(const IntPoly& p, const OuterMonomial& mask) {
    auto coeffs = coefficients(p, mask);
    for (const auto& c : coeffs)
      if (c.size() == 1) return IntPoly(1);
    return gcd_list(std::move(coeffs));
  }

  /// Image-gcd degree per shared variable, or -1 when the image test was inconclusive.
  std::vector<int> image_degrees(const IntPoly& a, const IntPoly& b, const std::vector<std::size_t>& vars) {
    std::vector<int> out;
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<std::vector<u64>> powers(OuterMonomial::kMaxVars);
      for (auto v : vars) {
        unsigned top = std::max(a.degree(v), b.degree(v));
        u64 pt = rng_() % (kPrime - 1) + 1;
        powers[v].assign(top + 1, 1);
        for (unsigned e = 1; e <= top; ++e) powers[v][e] = mulmod(powers[v][e - 1], pt);
      }
      out.clear();
      bool ok = true;
      for (auto x : vars) {
        auto ia = image(a, x, powers), ib = image(b, x, powers);
        int da = static_cast<int>(ia.size()) - 1, db = static_cast<int>(ib.size()) - 1;
        if (trim(ia) != da || trim(ib) != db) {
          ok = false;
          break;
        }
        out.push_back(univariate_gcd_degree(std::move(ia), std::move(ib)));
      }
      if (ok) return out;
    }
    return std::vector<int>(vars.size(), -1);
  }

  /// a, b have integer content 1 and no monomial factor.
  IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_constant() || b.is_constant()) return IntPoly(1);
    auto va = a.variables(), vb = b.variables();
    std::vector<std::size_t> only_a, only_b, shared;
    std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
    std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    if (shared.empty()) return IntPoly(1);
    // A variable present on one side only cannot occur in the gcd.
    if (!only_a.empty()) return gcd(content_in(a, OuterMonomial::mask_of(only_a)), b);
    if (!only_b.empty()) return gcd(a, content_in(b, OuterMonomial::mask_of(only_b)));

    auto degs = image_degrees(a, b, shared);
    std::vector<std::size_t> candidates, absent;
    for (std::size_t k = 0; k < shared.size(); ++k) (degs[k] == 0 ? absent : candidates).push_back(shared[k]);
    if (candidates.empty()) return IntPoly(1);
    // The gcd lives in the candidate variables only; contents in the others carry it.
    if (!absent.empty()) {
      OuterMonomial mask = OuterMonomial::mask_of(absent);
      return gcd(content_in(a, mask), content_in(b, mask));
    }
    std::size_t x = *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t p, std::size_t q) {
      auto key = [&](std::size_t v) { return std::make_pair(std::max(a.degree(v), b.degree(v)), v); };
      return key(p) < key(q);
    });
    OuterMonomial mask = OuterMonomial::mask_of({x});
    IntPoly ca = content_in(a, mask), cb = content_in(b, mask);
    IntPoly c = gcd(ca, cb);
    IntPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    return prs(pa, pb, x) * c;
  }

  /// Primitive part with respect to x, integer content removed.
  IntPoly primitive_in(const IntPoly& p, std::size_t x) {
    Int ic = content(p);
    IntPoly q = ic == 1 ? p : p.divide_exact(IntPoly(ic)).value();
    IntPoly c = content_in_general(q, x);
    return c.is_constant() ? q : *q.divide_exact(c);
  }

  /// Content in x for arbitrary p (may have monomial content).
  IntPoly content_in_general(const IntPoly& p, std::size_t x) {
    auto coeffs = coefficients(p, OuterMonomial::mask_of({x}));
    return gcd_list(std::move(coeffs));
  }

  static std::vector<IntPoly> prem(std::vector<IntPoly> r, const std::vector<IntPoly>& b) {
    const std::size_t db = b.size() - 1;
    const IntPoly& lb = b.back();
    while (!r.empty() && r.size() - 1 >= db) {
      std::size_t shift = r.size() - 1 - db;
      IntPoly lr = r.back();
      for (auto& c : r) c = c * lb;
      for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * b[k];
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return r;
  }

  /// Gcd of a and b, both primitive with respect to x.
  IntPoly prs(IntPoly a, IntPoly b, std::size_t x) {
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    if (b.degree(x) == 0) return IntPoly(1);
    for (;;) {
      auto r = prem(univariate(a, x), univariate(b, x));
      if (r.empty()) return normalize_sign(b);
      if (r.size() == 1) return IntPoly(1);
      a = std::move(b);
      b = primitive_in(from_univariate(r, x), x);
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) { return GcdEngine().gcd(a, b); }

OuterPoly normalize(const OuterPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = to_int_poly(p);
  Int c = GcdEngine::content(q);
  if (q.leading().coeff < 0) c = -c;
  return to_outer_poly(q).scaled(Rat(1) / Rat(c));
}

OuterPoly gcd(const OuterPoly& a, const OuterPoly& b) {
  return normalize(to_outer_poly(GcdEngine().gcd(to_int_poly(a), to_int_poly(b))));
}

OuterPoly gcd_multi(const std::vector<OuterPoly>& ps) {
  GcdEngine engine;
  IntPoly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = any ? engine.gcd(g, to_int_poly(p)) : to_int_poly(p);
    any = true;
  }
  if (!any) throw MathError("gcd of zero polynomials");
  return normalize(to_outer_poly(g));
}

}  // namespace bires
