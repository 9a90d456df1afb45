#pragma once

#include <array>
#include <vector>

#include "bires/regions.hpp"
#include "bires/ring.hpp"

namespace bires {

/// Matrix of BiPoly entries with declared row and column bidegrees. Construction
/// validates that each nonzero entry (j,i) is bihomogeneous of degree
/// col_degrees[i] - row_degrees[j].
class BigradedMatrix {
 public:
  BigradedMatrix() = default;
  BigradedMatrix(std::vector<std::vector<BiPoly>> entries, std::vector<BiDeg> row_degrees,
                 std::vector<BiDeg> col_degrees, std::size_t syzygy_columns = 0);

  /// Infers column degrees from the entries; every column needs a nonzero entry.
  static BigradedMatrix with_inferred_columns(std::vector<std::vector<BiPoly>> entries,
                                              std::vector<BiDeg> row_degrees);

  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const BiPoly& at(std::size_t j, std::size_t i) const { return entries_[j][i]; }
  const std::vector<std::vector<BiPoly>>& entries() const { return entries_; }
  const std::vector<BiDeg>& row_degrees() const { return row_degrees_; }
  const std::vector<BiDeg>& col_degrees() const { return col_degrees_; }
  /// Number of leading columns that come from the syzygy matrix; the rest are F-columns.
  std::size_t syzygy_columns() const { return syzygy_columns_; }

 private:
  std::vector<std::vector<BiPoly>> entries_;
  std::vector<BiDeg> row_degrees_;
  std::vector<BiDeg> col_degrees_;
  std::size_t syzygy_columns_ = 0;
};

/// The base-locus data: generators g_1..g_n with a syzygy (Hilbert-Burch) matrix.
class GSpec {
 public:
  enum class Kind { CompleteIntersection, UserHilbertBurch };

  /// n = 2 with the Koszul syzygy.
  static GSpec complete_intersection(const BiPoly& g1, const BiPoly& g2);
  /// Any n >= 2 with a user syzygy matrix; checks [g]*phi = 0 and degree consistency.
  static GSpec with_syzygies(std::vector<BiPoly> generators, BigradedMatrix phi);

  const std::vector<BiPoly>& generators() const { return generators_; }
  const std::vector<BiDeg>& degrees() const { return degrees_; }
  const BigradedMatrix& phi() const { return phi_; }
  Kind kind() const { return kind_; }
  std::size_t size() const { return generators_.size(); }

 private:
  std::vector<BiPoly> generators_;
  std::vector<BiDeg> degrees_;
  BigradedMatrix phi_;
  Kind kind_ = Kind::CompleteIntersection;
};

BigradedMatrix koszul_phi(const BiPoly& g1, const BiPoly& g2);

/// Psi together with the three F_i = sum_j g_j Psi[j][i].
struct PsiBuild {
  BigradedMatrix psi;
  std::array<BiPoly, 3> f;
  OuterRing ring;
  std::array<BiPoly, 4> p{};  // parametrization, implicit flavor only
  BiDeg ab{};                 // common F-degree in the implicit flavor
};

/// Coefficient variables c_i_j_alpha, one per monomial of R_(a_i-k_j, b_i-l_j), allocated
/// in (i, j, alpha) order.
OuterRing generic_coefficient_ring(const std::vector<BiDeg>& generator_degrees, const std::array<BiDeg, 3>& fdegs);

PsiBuild build_psi_generic(const GSpec& g, const std::array<BiDeg, 3>& fdegs);

/// h is n x 4 with entries over k; Psi[j][i] = h_ji - (X,Y,Z)_i h_j3.
PsiBuild build_psi_implicit(const GSpec& g, const BigradedMatrix& h);

/// Column concatenation with phi first; records phi's width as the syzygy column count.
BigradedMatrix augment(const BigradedMatrix& phi, const BigradedMatrix& psi);

/// True iff [g] * M = [0 ... 0, F_0, F_1, F_2].
bool verify_factorization(const GSpec& g, const BigradedMatrix& m, const std::array<BiPoly, 3>& f);

/// Sum of base-point multiplicities for complete intersections: k1 l2 + k2 l1.
int ci_multiplicity(const GSpec& g);

DegreeData degree_data(const GSpec& g, const std::array<BiDeg, 3>& fdegs);

}  // namespace bires
