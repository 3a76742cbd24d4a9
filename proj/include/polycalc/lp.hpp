#pragma once

#include "polycalc/constraint_form.hpp"
#include "polycalc/rational.hpp"

namespace polycalc {

enum class LPStatus { Infeasible, Unbounded, Optimal };

struct LinearProgram {
  RVector objective;           // maximize <objective, x>
  ConstraintForm constraints;  // objective.size() == constraints.dim

  LinearProgram(RVector c, ConstraintForm region)
      : objective(std::move(c)), constraints(std::move(region)) {}
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  RVector point;   // Optimal: the maximizer; Unbounded: a feasible point
  Rational value;  // Optimal only
  RVector ray;     // Unbounded: recession direction with <objective, ray> > 0
};

/// Exact primal simplex with Bland's anti-cycling rule. Equality rows are
/// presolved by parametrizing the affine subspace (x = x0 + N t), free
/// variables are split, and a single-artificial phase one establishes
/// feasibility. All three outcomes are exact; on Optimal, the returned point
/// is the lexicographically smallest point of the optimal face (coordinates
/// clamped toward zero when the face is unbounded along them, so the result
/// is deterministic even for faces without a lexicographic minimum).
LPResult solve(const LinearProgram& lp);

/// Same pivot path without the lexicographic refinement; status and value
/// are identical to solve(). Used where only they matter (canonicalization,
/// redundancy tests, oracles).
LPResult solveBasic(const LinearProgram& lp);

/// True iff sup <objective, x> over the region is finite or the region is
/// empty.
bool isBoundedAbove(const RVector& objective, const ConstraintForm& region);

}  // namespace polycalc
