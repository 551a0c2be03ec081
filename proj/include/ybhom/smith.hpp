#ifndef YBHOM_SMITH_HPP
#define YBHOM_SMITH_HPP

#include <optional>
#include <vector>

#include "ybhom/errors.hpp"
#include "ybhom/intmatrix.hpp"

namespace ybhom {

/// U*A*V = D with U, V unimodular, D diagonal with d_1 | d_2 | ..., d_i >= 0.
/// Uinv and Vinv are maintained alongside U and V so that column spans and
/// preimage lattices can be read off without a separate inversion.
struct SmithResult {
    IntMatrix U, D, V, Uinv, Vinv;
    EIndex rank = 0;
    std::vector<Int> invariant_factors() const;  // the nonzero d_i
};

/// Deterministic elimination with minimal-absolute-value pivoting and a
/// divisibility repair pass.
SmithResult smith_normal_form(IntMatrix A);

/// Diagonal of the Smith form only (no transform bookkeeping).
std::vector<Int> smith_diagonal(IntMatrix A);

EIndex rank_z(const IntMatrix& A);

/// Fraction-free Bareiss determinant (square input).
Int determinant(IntMatrix A);

/// The integer column span of a generator matrix, with membership tests and,
/// when the span is a direct summand (all invariant factors 1), a Z-basis.
class ColumnSpan {
  public:
    explicit ColumnSpan(const IntMatrix& gens);

    EIndex ambient_dim() const { return dim_; }
    EIndex rank() const { return snf_.rank; }
    bool unit_factors() const;
    bool contains(const IntVector& v) const;
    /// Z-basis of the span; requires unit_factors().
    IntMatrix basis() const;
    /// Coordinates of v in basis(); nullopt if v is outside the span.
    std::optional<IntVector> coordinates(const IntVector& v) const;

  private:
    EIndex dim_;
    SmithResult snf_;
};

}  // namespace ybhom

#endif
