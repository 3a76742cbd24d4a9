#pragma once

#include "polycalc/polyhedron.hpp"

#include <vector>

namespace polycalc {

/// A nonempty face of a canonical polyhedron, identified by its canonical
/// active set: the indices of the inequality rows that hold with equality on
/// all of the face (the largest index set J with face = F_J).
struct Face {
  std::vector<Index> activeSet;
  Polyhedron body;
};

/// Inequality indices of the canonical form holding with equality at x.
/// Throws PointNotInSet.
std::vector<Index> activeSet(const Polyhedron& p, const RVector& x);

/// F_J = {x in P : row i tight for all i in J}; possibly empty.
Polyhedron faceFromIndexSet(const Polyhedron& p, const std::vector<Index>& indices);

/// Every nonempty face exactly once (P itself included), deduplicated by
/// canonical active set, ordered by dimension then active set. Exhaustive
/// search from the whole set, tightening one inequality at a time; worst
/// case exponential, fine at desk scale. Throws EmptySet.
std::vector<Face> enumerateFaces(const Polyhedron& p);

/// Functional exposing the face: the average of the negated active normals,
/// so the face is exactly argmin of <x*, .> over P; the zero functional for
/// the whole set.
RVector exposingFunctional(const Polyhedron& p, const Face& face);

/// Barycenter of the canonical points plus the sum of the rays; its active
/// set is minimal, so every non-implicit inequality is strict at it.
/// Throws EmptySet.
RVector relativeInteriorPoint(const Polyhedron& p);

}  // namespace polycalc
