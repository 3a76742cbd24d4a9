#pragma once

#include "polycalc/rational.hpp"

#include <vector>

namespace polycalc {

/// H-representation of a generalized polyhedral convex set: the solution set
/// of {x : eqLhs x = eqRhs, ineqLhs x <= ineqRhs}. The equality block cuts
/// out the affine subspace, the inequality block the half-spaces.
///
/// The canonical form (see canonicalizeConstraints) has equality rows in
/// reduced echelon order, inequality rows scaled to coprime integers,
/// reduced modulo the equalities, irredundant, and sorted; the empty set is
/// the single sentinel row 0 <= -1.
struct ConstraintForm {
  Index dim = 0;
  RMatrix eqLhs;    // k x dim
  RVector eqRhs;    // k
  RMatrix ineqLhs;  // p x dim
  RVector ineqRhs;  // p

  static ConstraintForm universe(Index dim);
  static ConstraintForm empty(Index dim);

  Index eqCount() const { return eqLhs.rows(); }
  Index ineqCount() const { return ineqLhs.rows(); }

  /// True when the form is the canonical empty sentinel.
  bool flaggedEmpty() const;

  /// Direct evaluation of the defining system at x.
  bool satisfied(const RVector& x) const;

  /// Inequality indices holding with equality at x (x need not be a member).
  std::vector<Index> activeIndices(const RVector& x) const;

  void appendEquality(const RVector& lhs, const Rational& rhs);
  void appendInequality(const RVector& lhs, const Rational& rhs);

  bool operator==(const ConstraintForm& other) const;
};

/// Canonical form of the same set: implicit equalities moved into the
/// equality block, redundant inequalities dropped (an inequality is redundant
/// iff the maximum of its left-hand side subject to the remaining rows stays
/// below its right-hand side), rows normalized and sorted, emptiness
/// detected. Implemented in the polyhedra layer since it runs exact LPs.
ConstraintForm canonicalizeConstraints(const ConstraintForm& c);

}  // namespace polycalc
