#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "bires/error.hpp"
#include "bires/rat.hpp"

namespace bires {

/// Exponent vector over at most 64 outer variables, one byte per variable packed
/// big-endian, so comparing the words compares monomials lexicographically with
/// variable 0 most significant. Exponents are capped at 127 which keeps packed
/// addition free of carries.
class OuterMonomial {
 public:
  static constexpr std::size_t kMaxVars = 64;
  static constexpr unsigned kMaxExponent = 127;

  OuterMonomial() = default;

  static OuterMonomial variable(std::size_t var, unsigned exponent = 1) {
    OuterMonomial m;
    m.set_exponent(var, exponent);
    return m;
  }

  unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((words_[var / 8] >> shift(var)) & 0xffu);
  }

  void set_exponent(std::size_t var, unsigned e) {
    if (var >= kMaxVars) throw InputError("too many outer variables (limit 64)");
    if (e > kMaxExponent) throw MathError("outer exponent overflow (limit 127)");
    auto& w = words_[var / 8];
    w = (w & ~(std::uint64_t{0xff} << shift(var))) | (std::uint64_t{e} << shift(var));
  }

  bool is_one() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto w : words_)
      for (; w; w >>= 8) d += static_cast<unsigned>(w & 0xffu);
    return d;
  }

  /// True iff this monomial divides `other`.
  bool divides(const OuterMonomial& other) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      if ((((other.words_[k] | kHigh) - words_[k]) & kHigh) != kHigh) return false;
    }
    return true;
  }

  OuterMonomial operator*(const OuterMonomial& o) const {
    OuterMonomial r;
    std::uint64_t overflow = 0;
    for (std::size_t k = 0; k < kWords; ++k) {
      r.words_[k] = words_[k] + o.words_[k];
      overflow |= r.words_[k];
    }
    if (overflow & kHigh) throw MathError("outer exponent overflow (limit 127)");
    return r;
  }

  /// Exact quotient; requires o.divides(*this).
  OuterMonomial operator/(const OuterMonomial& o) const {
    OuterMonomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] - o.words_[k];
    return r;
  }

  /// Componentwise minimum of exponents.
  static OuterMonomial gcd(const OuterMonomial& a, const OuterMonomial& b) {
    OuterMonomial r;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      unsigned e = std::min(a.exponent(v), b.exponent(v));
      if (e) r.set_exponent(v, e);
    }
    return r;
  }

  /// Calls f(var, exponent) for every variable with a positive exponent, in index order.
  template <class F>
  void for_each_variable(F&& f) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      if (!words_[k]) continue;
      for (std::size_t b = 0; b < 8; ++b) {
        unsigned e = static_cast<unsigned>((words_[k] >> (56 - 8 * b)) & 0xffu);
        if (e) f(k * 8 + b, e);
      }
    }
  }

  /// Mask with all bits of the given variables set; combine with select()/drop().
  static OuterMonomial mask_of(const std::vector<std::size_t>& vars) {
    OuterMonomial m;
    for (auto v : vars) m.words_[v / 8] |= std::uint64_t{0xff} << shift(v);
    return m;
  }
  OuterMonomial select(const OuterMonomial& mask) const {
    OuterMonomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] & mask.words_[k];
    return r;
  }
  OuterMonomial drop(const OuterMonomial& mask) const {
    OuterMonomial r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] & ~mask.words_[k];
    return r;
  }

  friend auto operator<=>(const OuterMonomial&, const OuterMonomial&) = default;
  friend bool operator==(const OuterMonomial&, const OuterMonomial&) = default;

 private:
  static constexpr std::size_t kWords = kMaxVars / 8;
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  static unsigned shift(std::size_t var) { return static_cast<unsigned>(56 - 8 * (var % 8)); }

  std::array<std::uint64_t, kWords> words_{};
};

/// Sparse polynomial over the outer variables with coefficients in Int or Rat.
/// Terms are kept strictly descending in the monomial order with no zero coefficients,
/// so equality is structural.
template <class C>
class SparsePoly {
 public:
  struct Term {
    OuterMonomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  SparsePoly() = default;
  SparsePoly(const C& c) {  // NOLINT(google-explicit-constructor): constants embed naturally
    if (c != 0) terms_.push_back({OuterMonomial{}, c});
  }
  SparsePoly(int c) : SparsePoly(C(c)) {}  // NOLINT(google-explicit-constructor)

  static SparsePoly variable(std::size_t var, unsigned exponent = 1) {
    SparsePoly p;
    p.terms_.push_back({OuterMonomial::variable(var, exponent), C(1)});
    return p;
  }

  static SparsePoly monomial(const OuterMonomial& m, const C& c) {
    SparsePoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from terms in any order; combines duplicates and drops zeros.
  static SparsePoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    SparsePoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  /// Adopts terms that are already strictly descending and nonzero.
  static SparsePoly from_sorted_terms(std::vector<Term> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  C constant_value() const { return is_zero() ? C(0) : terms_.back().mono.is_one() ? terms_.back().coeff : C(0); }
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }

  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
    return d;
  }

  /// Largest combined exponent in the given variable set.
  unsigned degree_in(const std::vector<std::size_t>& vars) const {
    unsigned d = 0;
    for (const auto& t : terms_) {
      unsigned s = 0;
      for (auto v : vars) s += t.mono.exponent(v);
      d = std::max(d, s);
    }
    return d;
  }

  /// Sorted list of variables that occur.
  std::vector<std::size_t> variables() const {
    std::array<bool, OuterMonomial::kMaxVars> seen{};
    for (const auto& t : terms_) t.mono.for_each_variable([&](std::size_t v, unsigned) { seen[v] = true; });
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (seen[v]) out.push_back(v);
    return out;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const C& c) const {
    if (c == 0) return {};
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  SparsePoly times_monomial(const OuterMonomial& m) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  /// Heap-based product: terms come out already in order.
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const SparsePoly& small = a.size() <= b.size() ? a : b;
    const SparsePoly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
      SparsePoly r = large;
      for (auto& t : r.terms_) {
        t.mono = t.mono * small.terms_[0].mono;
        t.coeff *= small.terms_[0].coeff;
      }
      return r;
    }
    struct Entry {
      OuterMonomial mono;
      std::uint32_t i, j;
    };
    auto cmp = [](const Entry& x, const Entry& y) { return x.mono < y.mono; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (std::uint32_t i = 0; i < small.size(); ++i)
      heap.push({small.terms_[i].mono * large.terms_[0].mono, i, 0});
    SparsePoly r;
    r.terms_.reserve(small.size() + large.size());
    C prod;
    while (!heap.empty()) {
      Entry e = heap.top();
      heap.pop();
      prod = small.terms_[e.i].coeff * large.terms_[e.j].coeff;
      if (!r.terms_.empty() && r.terms_.back().mono == e.mono) {
        r.terms_.back().coeff += prod;
      } else {
        if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
        r.terms_.push_back({e.mono, prod});
      }
      if (e.j + 1 < large.size()) heap.push({small.terms_[e.i].mono * large.terms_[e.j + 1].mono, e.i, e.j + 1});
    }
    if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
    return r;
  }

  /// Exact division. Returns the quotient iff `d` divides this polynomial with a
  /// quotient whose coefficients stay in C. Works by cancelling leading terms, which is
  /// complete for exact division under any monomial order.
  std::optional<SparsePoly> divide_exact(const SparsePoly& d) const {
    if (d.is_zero()) throw MathError("division by zero polynomial");
    if (is_zero()) return SparsePoly{};
    if (d.size() == 1) {
      SparsePoly q;
      q.terms_.reserve(size());
      for (const auto& t : terms_) {
        if (!d.terms_[0].mono.divides(t.mono)) return std::nullopt;
        auto c = coeff_quotient(t.coeff, d.terms_[0].coeff);
        if (!c) return std::nullopt;
        q.terms_.push_back({t.mono / d.terms_[0].mono, std::move(*c)});
      }
      return q;
    }
    std::map<OuterMonomial, C, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
    const Term& lead = d.terms_.front();
    std::vector<Term> q;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!lead.mono.divides(it->first)) return std::nullopt;
      auto c = coeff_quotient(it->second, lead.coeff);
      if (!c) return std::nullopt;
      OuterMonomial m = it->first / lead.mono;
      rem.erase(it);
      for (std::size_t k = 1; k < d.terms_.size(); ++k) {
        OuterMonomial pm = d.terms_[k].mono * m;
        auto [pos, inserted] = rem.try_emplace(pm);
        pos->second -= *c * d.terms_[k].coeff;
        if (pos->second == 0) rem.erase(pos);
      }
      q.push_back({m, std::move(*c)});
    }
    return from_sorted_terms(std::move(q));
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  static std::optional<C> coeff_quotient(const C& a, const C& b) {
    if constexpr (std::is_same_v<C, Int>) {
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
      Int q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    } else {
      return C(a / b);
    }
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].mono > a.terms_[i].mono) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using OuterPoly = SparsePoly<Rat>;
using IntPoly = SparsePoly<Int>;

}  // namespace bires
