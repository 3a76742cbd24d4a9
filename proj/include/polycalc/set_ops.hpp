#pragma once

#include "polycalc/polyhedron.hpp"

#include <vector>

namespace polycalc {

/// Linear map between coordinate spaces; rows = output dim, cols = input dim.
using LinearMap = RMatrix;

/// Pairwise point sums, union of rays and lineality bases. Closed as stated
/// at finite dimension, so no closure is taken.
Polyhedron minkowskiSum(const Polyhedron& a, const Polyhedron& b);

/// Constraint rows of both sets concatenated.
Polyhedron intersection(const Polyhedron& a, const Polyhedron& b);

/// Forward image T(P); closed at finite dimension, no closure taken.
Polyhedron image(const LinearMap& map, const Polyhedron& p);

/// Preimage {x : T x in Q} via composed equalities and pulled-back rows.
Polyhedron preimage(const LinearMap& map, const Polyhedron& q);

/// Smallest closed convex set containing every part; empty parts are
/// skipped. The lineality spans combine without closure at finite dimension.
Polyhedron hullUnion(const std::vector<Polyhedron>& parts);

/// Directions v with x + t v in P for all x, t >= 0. Throws EmptySet.
Polyhedron recessionCone(const Polyhedron& p);

/// cone(P) for 0 in P: rays through all generators plus the lineality space,
/// closed without taking closures at finite dimension.
/// Throws NotContainingOrigin.
Polyhedron generatedCone(const Polyhedron& p);

/// cone(P - x) computed from the active constraint rows at x.
/// Throws PointNotInSet.
Polyhedron tangentCone(const Polyhedron& p, const RVector& x);

/// cone of active inequality normals plus the row space of the equality
/// block (the annihilator of ker A). Lives in the dual space under the
/// standard pairing. Throws PointNotInSet.
Polyhedron normalCone(const Polyhedron& p, const RVector& x);

/// {x* : <x*, x> <= 1 on P}, in the dual space. Throws EmptySet.
Polyhedron polar(const Polyhedron& p);

Polyhedron translate(const Polyhedron& p, const RVector& shift);

struct SeparationResult {
  bool intersects = false;
  RVector witness;     // a common point when the sets intersect
  RVector functional;  // x* with sup over the first set < inf over the second
  Rational supFirst;
  Rational infSecond;
};

/// Strict separation of two disjoint sets, or a verified common point.
/// Throws EmptySet when either set is empty.
SeparationResult separate(const Polyhedron& a, const Polyhedron& b);

}  // namespace polycalc
