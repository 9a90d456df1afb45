#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bires/rat.hpp"
#include "bires/sparse_poly.hpp"

namespace bires {

/// Bidegree (x, y). Ordering via operator<=> is lexicographic and only used for
/// containers; use geq() for the componentwise partial order.
struct BiDeg {
  int x = 0;
  int y = 0;

  BiDeg operator+(BiDeg o) const { return {x + o.x, y + o.y}; }
  BiDeg operator-(BiDeg o) const { return {x - o.x, y - o.y}; }
  BiDeg& operator+=(BiDeg o) { return *this = *this + o; }
  bool geq(BiDeg o) const { return x >= o.x && y >= o.y; }
  bool nonnegative() const { return x >= 0 && y >= 0; }
  friend auto operator<=>(const BiDeg&, const BiDeg&) = default;
};

std::string to_string(BiDeg d);

/// Monomial s^es t^et u^eu v^ev in the parameter ring k[s,t,u,v].
struct ParamMonomial {
  std::array<std::uint16_t, 4> e{};  // exponents of s, t, u, v

  ParamMonomial() = default;
  ParamMonomial(unsigned es, unsigned et, unsigned eu, unsigned ev);

  BiDeg bidegree() const { return {e[0] + e[1], e[2] + e[3]}; }
  unsigned total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
  ParamMonomial operator*(const ParamMonomial& o) const;
  bool is_one() const { return e == std::array<std::uint16_t, 4>{}; }

  /// Graded lexicographic order with s > t > u > v.
  friend std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    return a.e <=> b.e;
  }
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

/// All monomials of bidegree d, descending in the parameter order. Empty when d has a
/// negative component.
std::vector<ParamMonomial> monomial_basis(BiDeg d);

/// Position of m inside monomial_basis(m.bidegree()).
std::size_t basis_index(const ParamMonomial& m);

/// One variable of the outer (coefficient) ring.
struct OuterVar {
  enum class Kind { X, Y, Z, W, Coeff };
  Kind kind = Kind::X;
  int i = 0;      // F-block for coefficients
  int j = 0;      // generator index (1-based) for coefficients
  int alpha = 0;  // monomial index for coefficients

  std::string name() const;
  /// F-column the variable belongs to, or -1 (W).
  int block() const;
  friend bool operator==(const OuterVar&, const OuterVar&) = default;
};

/// Ordered universe of outer variables. Variable indices are positions in this list.
class OuterRing {
 public:
  OuterRing() = default;
  explicit OuterRing(std::vector<OuterVar> vars);

  /// X, Y, Z, W.
  static OuterRing implicit();

  std::size_t size() const { return vars_.size(); }
  const OuterVar& var(std::size_t k) const { return vars_[k]; }
  const std::vector<OuterVar>& vars() const { return vars_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  /// Indices of every variable whose block() == i.
  std::vector<std::size_t> block_vars(int i) const;
  friend bool operator==(const OuterRing& a, const OuterRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<OuterVar> vars_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Polynomial in s,t,u,v with OuterPoly coefficients. Terms are strictly descending in
/// the parameter order with nonzero coefficients.
class BiPoly {
 public:
  using Term = std::pair<ParamMonomial, OuterPoly>;

  BiPoly() = default;
  BiPoly(const OuterPoly& c);  // NOLINT(google-explicit-constructor): scalars embed
  BiPoly(int c) : BiPoly(OuterPoly(c)) {}  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const ParamMonomial& m, const OuterPoly& c = OuterPoly(1));
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (zero when absent).
  OuterPoly coefficient(const ParamMonomial& m) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(const OuterPoly& c) const;
  BiPoly times_monomial(const ParamMonomial& m) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }

  /// Evaluates the parameters at a point (rational values for s,t,u,v).
  OuterPoly evaluate_params(const std::array<Rat, 4>& point) const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Common bidegree of all terms, or nullopt when inhomogeneous. Throws MathError on zero.
std::optional<BiDeg> bidegree_of(const BiPoly& p);

/// Printing and parsing with the grammar
///   expr := [sign] term (("+"|"-") term)* ; term := factor ("*" factor)* ;
///   factor := rational | var ("^" uint)? | "(" expr ")".
/// Outer variables are resolved against `ring`; unknown names raise ParseError.
BiPoly parse_poly(std::string_view text, const OuterRing& ring);
OuterPoly parse_outer(std::string_view text, const OuterRing& ring);
std::string to_string(const BiPoly& p, const OuterRing& ring);
std::string to_string(const OuterPoly& p, const OuterRing& ring);
std::string to_string(const ParamMonomial& m);

/// Evaluation of an outer polynomial; `values` is indexed by variable and must cover
/// every variable present (InputError otherwise).
Rat evaluate(const OuterPoly& p, const std::vector<std::optional<Rat>>& values);

/// Integer/rational conversions used by the exact linear algebra layer.
IntPoly to_int_poly(const OuterPoly& p, Int* scale = nullptr);
OuterPoly to_outer_poly(const IntPoly& p);

}  // namespace bires
