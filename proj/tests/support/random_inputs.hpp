#pragma once

#include "polycalc/functions.hpp"
#include "polycalc/polyhedron.hpp"

#include <random>

namespace polycalc::testing {

using Rng = std::mt19937_64;

/// Small rational with numerator in [-limit, limit] and denominator in
/// {1, .., maxDen}.
Rational randomRational(Rng& rng, int limit = 9, int maxDen = 3);

RVector randomVector(Rng& rng, Index dim, int limit = 9, int maxDen = 3);

/// Random H-form: dim <= maxDim, up to maxIneq inequalities and maxEq
/// equalities. May describe anything from the empty set to the whole space.
ConstraintForm randomConstraints(Rng& rng, Index dim, Index maxIneq, Index maxEq);

/// Nonempty random polyhedron (resamples until nonempty).
Polyhedron randomNonemptyPolyhedron(Rng& rng, Index dim, Index maxIneq, Index maxEq);

/// Nonempty bounded random polytope: random inequalities intersected with a
/// box, resampled until nonempty.
Polyhedron randomPolytope(Rng& rng, Index dim, Index maxIneq);

/// Proper function: random nonempty domain plus 1..maxPieces affine pieces.
GPCFunction randomFunction(Rng& rng, Index dim, Index maxPieces, Index maxIneq, Index maxEq);

/// Random point of the set: convex combination of its points plus small
/// nonnegative ray and free lineality steps.
RVector randomMember(Rng& rng, const Polyhedron& p);

}  // namespace polycalc::testing
