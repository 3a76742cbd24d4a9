#pragma once

#include "polycalc/rational.hpp"

#include <optional>
#include <vector>

namespace polycalc {

struct RowEchelon {
  RMatrix reduced;                // reduced row echelon form, same shape as input
  Index rank = 0;                 // number of nonzero rows
  std::vector<Index> pivotCols;   // one pivot column per nonzero row
};

/// Reduced row echelon form with leading ones; exact.
RowEchelon rref(const RMatrix& m);

/// Independent vectors spanning {x : m x = 0}; count = cols - rank.
/// Each vector is scaled to coprime integers with positive leading entry.
std::vector<RVector> nullspaceBasis(const RMatrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<RVector> solveAffine(const RMatrix& m, const RVector& rhs);

/// Independent vectors spanning the row space of m (the annihilator of its
/// kernel under the standard pairing), in canonical primitive form.
std::vector<RVector> rowspaceBasis(const RMatrix& m);

/// Stacks rows into a matrix (0 x cols when empty).
RMatrix stackRows(const std::vector<RVector>& rows, Index cols);

}  // namespace polycalc
