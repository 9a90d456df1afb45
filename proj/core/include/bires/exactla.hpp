#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bires/strand.hpp"

namespace bires {

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Submatrix on the given rows and columns, in the given order.
  QMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Values for outer variables, indexed by variable.
using Assignment = std::vector<std::optional<Rat>>;

/// Independent random values in [-10^4, 10^4] for every variable of `ring`, derived from
/// `seed` only.
Assignment random_assignment(const OuterRing& ring, std::uint64_t seed);

Rat specialize(const OuterPoly& p, const Assignment& a);
QMatrix specialize(const ThetaStrand& t, const Assignment& a);

struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;  // sorted
  std::vector<std::size_t> cols;  // sorted; lexicographically first independent set
};

RankProfile rank_profile(const QMatrix& m);

using PolyMatrix = std::vector<std::vector<OuterPoly>>;

/// Determinant by fraction-free Bareiss elimination over Z[outer] after clearing
/// denominators row by row; cofactor expansion below size 5.
OuterPoly det_ff(const PolyMatrix& m);
/// Plain Laplace expansion along the first row (reference implementation).
OuterPoly det_cofactor(const PolyMatrix& m);

/// Square submatrix of Theta on all rows and the given columns.
PolyMatrix theta_submatrix(const ThetaStrand& t, const std::vector<std::size_t>& cols);

/// Column selection for the block-i minor: greedy independent columns whose minor label
/// avoids F-column `block`, then completion by columns whose label involves it. The
/// greedy pass runs on Theta specialized at the assignment drawn from `seed`; with
/// `shuffle` the candidate order inside each group is permuted by the same seed.
/// Throws MathError when the completion cannot reach target_size.
std::vector<std::size_t> select_minor_by_block(const ThetaStrand& t, const OuterRing& ring, int block,
                                               std::size_t target_size, std::uint64_t seed, bool shuffle = false);

/// Gcd over Q normalized to integer coefficients with content 1 and positive leading
/// coefficient. Folds pairwise from the left. Throws MathError if all inputs are zero.
OuterPoly gcd_multi(const std::vector<OuterPoly>& ps);
OuterPoly gcd(const OuterPoly& a, const OuterPoly& b);

/// Integer-coefficient primitive form with positive leading coefficient.
OuterPoly normalize(const OuterPoly& p);

/// Exact division over Q; returns the quotient when d divides p.
std::optional<OuterPoly> divides(const OuterPoly& d, const OuterPoly& p);

/// Integer polynomial gcd (content included), positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace bires
