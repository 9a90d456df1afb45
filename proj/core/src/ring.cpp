#include "bires/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bires/error.hpp"

namespace bires {

std::string to_string(BiDeg d) { return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")"; }

ParamMonomial::ParamMonomial(unsigned es, unsigned et, unsigned eu, unsigned ev) {
  for (unsigned x : {es, et, eu, ev})
    if (x > 0xffffu) throw MathError("parameter exponent overflow");
  e = {static_cast<std::uint16_t>(es), static_cast<std::uint16_t>(et), static_cast<std::uint16_t>(eu),
       static_cast<std::uint16_t>(ev)};
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  return ParamMonomial(e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]);
}

std::vector<ParamMonomial> monomial_basis(BiDeg d) {
  std::vector<ParamMonomial> out;
  if (!d.nonnegative()) return out;
  out.reserve(static_cast<std::size_t>((d.x + 1) * (d.y + 1)));
  for (int es = d.x; es >= 0; --es)
    for (int eu = d.y; eu >= 0; --eu)
      out.emplace_back(es, d.x - es, eu, d.y - eu);
  return out;
}

std::size_t basis_index(const ParamMonomial& m) {
  BiDeg d = m.bidegree();
  return static_cast<std::size_t>((d.x - m.e[0]) * (d.y + 1) + (d.y - m.e[2]));
}

// ---------------------------------------------------------------------------
// Outer variables

std::string OuterVar::name() const {
  switch (kind) {
    case Kind::X: return "X";
    case Kind::Y: return "Y";
    case Kind::Z: return "Z";
    case Kind::W: return "W";
    case Kind::Coeff:
      return "c_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(alpha);
  }
  return {};
}

int OuterVar::block() const {
  switch (kind) {
    case Kind::X: return 0;
    case Kind::Y: return 1;
    case Kind::Z: return 2;
    case Kind::W: return -1;
    case Kind::Coeff: return i;
  }
  return -1;
}

OuterRing::OuterRing(std::vector<OuterVar> vars) : vars_(std::move(vars)) {
  if (vars_.size() > OuterMonomial::kMaxVars)
    throw InputError("too many outer variables: " + std::to_string(vars_.size()) + " (limit 64)");
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (!index_.emplace(vars_[k].name(), k).second) throw InputError("duplicate outer variable " + vars_[k].name());
  }
}

OuterRing OuterRing::implicit() {
  using K = OuterVar::Kind;
  return OuterRing({{K::X}, {K::Y}, {K::Z}, {K::W}});
}

std::optional<std::size_t> OuterRing::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OuterRing::index_of(std::string_view name) const {
  auto k = find(name);
  if (!k) throw InputError("unknown outer variable " + std::string(name));
  return *k;
}

std::vector<std::size_t> OuterRing::block_vars(int i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k].block() == i) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(const OuterPoly& c) {
  if (!c.is_zero()) terms_.emplace_back(ParamMonomial{}, c);
}

BiPoly BiPoly::monomial(const ParamMonomial& m, const OuterPoly& c) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::map<ParamMonomial, OuterPoly, std::greater<>> acc;
  for (auto& [m, c] : terms) acc[m] += c;
  BiPoly p;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

OuterPoly BiPoly::coefficient(const ParamMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const ParamMonomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first > x[i].first) {
      out.push_back(y[j++]);
    } else {
      OuterPoly c = x[i].second + y[j].second;
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  BiPoly r;
  r.terms_ = std::move(out);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  std::vector<BiPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
  return BiPoly::from_terms(std::move(prods));
}

BiPoly BiPoly::scaled(const OuterPoly& c) const {
  std::vector<Term> out;
  for (const auto& [m, x] : terms_) {
    OuterPoly y = x * c;
    if (!y.is_zero()) out.emplace_back(m, std::move(y));
  }
  BiPoly r;
  r.terms_ = std::move(out);
  return r;
}

BiPoly BiPoly::times_monomial(const ParamMonomial& m) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

OuterPoly BiPoly::evaluate_params(const std::array<Rat, 4>& point) const {
  OuterPoly out;
  for (const auto& [m, c] : terms_) {
    Rat value = 1;
    for (int k = 0; k < 4; ++k) {
      Rat pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(point[k].get_mpq_t()), m.e[k]);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(point[k].get_mpq_t()), m.e[k]);
      value *= pw;
    }
    out += c.scaled(value);
  }
  return out;
}

std::optional<BiDeg> bidegree_of(const BiPoly& p) {
  if (p.is_zero()) throw MathError("the zero polynomial has no bidegree");
  BiDeg d = p.terms().front().first.bidegree();
  for (const auto& t : p.terms())
    if (t.first.bidegree() != d) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string param_factors(const ParamMonomial& m) {
  static constexpr char kNames[4] = {'s', 't', 'u', 'v'};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (!m.e[k]) continue;
    if (!out.empty()) out += '*';
    out += kNames[k];
    if (m.e[k] > 1) out += "^" + std::to_string(m.e[k]);
  }
  return out;
}

std::string outer_factors(const OuterMonomial& m, const OuterRing& ring) {
  std::string out;
  m.for_each_variable([&](std::size_t v, unsigned e) {
    if (v >= ring.size()) throw InputError("outer variable index outside the ring");
    if (!out.empty()) out += '*';
    out += ring.var(v).name();
    if (e > 1) out += "^" + std::to_string(e);
  });
  return out;
}

void append_term(std::string& out, const Rat& c, const std::string& factors) {
  bool negative = c < 0;
  Rat a = abs(c);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (factors.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += factors;
  } else {
    out += a.get_str() + "*" + factors;
  }
}

}  // namespace

std::string to_string(const ParamMonomial& m) {
  std::string f = param_factors(m);
  return f.empty() ? "1" : f;
}

std::string to_string(const OuterPoly& p, const OuterRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) append_term(out, t.coeff, outer_factors(t.mono, ring));
  return out;
}

std::string to_string(const BiPoly& p, const OuterRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string pf = param_factors(m);
    for (const auto& t : c.terms()) {
      std::string of = outer_factors(t.mono, ring);
      std::string f = of.empty() ? pf : pf.empty() ? of : of + "*" + pf;
      append_term(out, t.coeff, f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const OuterRing& ring) : text_(text), ring_(ring) {}

  BiPoly parse_all() {
    BiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    BiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_uint() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("integer too large", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  BiPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string num = digits();
      Rat q(Int(num), 1);
      if (accept('/')) {
        Int den(digits());
        if (den == 0) throw ParseError("zero denominator", at);
        q = Rat(Int(num), den);
        q.canonicalize();
      }
      return BiPoly(OuterPoly(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BiPoly variable() {
    std::size_t at = pos_;
    char c = text_[pos_++];
    BiPoly base;
    switch (c) {
      case 's': base = BiPoly::monomial(ParamMonomial(1, 0, 0, 0)); break;
      case 't': base = BiPoly::monomial(ParamMonomial(0, 1, 0, 0)); break;
      case 'u': base = BiPoly::monomial(ParamMonomial(0, 0, 1, 0)); break;
      case 'v': base = BiPoly::monomial(ParamMonomial(0, 0, 0, 1)); break;
      case 'X': case 'Y': case 'Z': case 'W': base = outer(std::string(1, c), at); break;
      case 'c': {
        std::string name = "c";
        for (int k = 0; k < 3; ++k) {
          if (pos_ >= text_.size() || text_[pos_] != '_') fail("expected '_' in coefficient variable");
          ++pos_;
          std::size_t start = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (start == pos_) fail("expected index in coefficient variable");
          name += "_" + std::to_string(std::stoul(std::string(text_.substr(start, pos_ - start))));
        }
        base = outer(name, at);
        break;
      }
      default: throw ParseError("unknown variable '" + std::string(1, c) + "'", at);
    }
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError("unknown variable (implicit multiplication is not allowed)", at);
    if (accept('^')) {
      unsigned e = small_uint();
      BiPoly r(1);
      for (unsigned k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  BiPoly outer(const std::string& name, std::size_t at) {
    auto k = ring_.find(name);
    if (!k) throw ParseError("unknown variable '" + name + "'", at);
    return BiPoly(OuterPoly::variable(*k));
  }

  std::string_view text_;
  const OuterRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text, const OuterRing& ring) { return Parser(text, ring).parse_all(); }

OuterPoly parse_outer(std::string_view text, const OuterRing& ring) {
  BiPoly p = parse_poly(text, ring);
  if (p.is_zero()) return {};
  if (p.size() != 1 || !p.terms()[0].first.is_one())
    throw InputError("expected a polynomial in outer variables only: '" + std::string(text) + "'");
  return p.terms()[0].second;
}

// ---------------------------------------------------------------------------
// Evaluation and conversions

Rat evaluate(const OuterPoly& p, const std::vector<std::optional<Rat>>& values) {
  Rat sum = 0;
  for (const auto& t : p.terms()) {
    Rat term = t.coeff;
    t.mono.for_each_variable([&](std::size_t v, unsigned e) {
      if (v >= values.size() || !values[v]) throw InputError("assignment misses outer variable " + std::to_string(v));
      const Rat& x = *values[v];
      Rat pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
      term *= pw;
    });
    sum += term;
  }
  return sum;
}

IntPoly to_int_poly(const OuterPoly& p, Int* scale) {
  Int l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<IntPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, Int(t.coeff.get_num() * (l / t.coeff.get_den()))});
  if (scale) *scale = l;
  return IntPoly::from_sorted_terms(std::move(out));
}

OuterPoly to_outer_poly(const IntPoly& p) {
  std::vector<OuterPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, Rat(t.coeff)});
  return OuterPoly::from_sorted_terms(std::move(out));
}

}  // namespace bires
