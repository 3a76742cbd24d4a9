#pragma once

#include "polycalc/faces.hpp"
#include "polycalc/functions.hpp"

namespace polycalc::oracle {

/// Exhaustive face discovery: every subset J of the inequality rows, F_J
/// tested for emptiness by LP, deduplicated by the set of rows tight on all
/// of F_J. Exponential on purpose; the reference the incremental enumerator
/// is checked against.
std::vector<Face> bruteForceFaces(const Polyhedron& p);

/// Same faces up to order: equal canonical active sets and set-equal bodies.
bool sameFaces(const std::vector<Face>& a, const std::vector<Face>& b);

/// Difference-quotient value of f'(x; h): the quotient (f(x+th) - f(x)) / t
/// is constant for small rational t > 0, so halve t from 1 until two
/// consecutive finite quotients agree. The feasible step length along h is
/// computed by direct row arithmetic; +infinity when it is zero.
ExtendedValue directionalDerivativeQuotient(const GPCFunction& f, const RVector& x,
                                            const RVector& h);

/// Conjugate value by exact LP over the epigraph (independent of the
/// cell-by-cell conjugate construction).
ExtendedValue conjugateValue(const GPCFunction& f, const RVector& xstar);

}  // namespace polycalc::oracle
