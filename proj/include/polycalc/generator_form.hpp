#pragma once

#include "polycalc/rational.hpp"

#include <vector>

namespace polycalc {

/// V-representation: convex hull of points, plus the cone of rays, plus the
/// span of the lineality basis. The set is nonempty iff points is nonempty.
///
/// The canonical form (see canonicalizeGenerators) has the lineality basis in
/// reduced echelon form, points and rays reduced modulo the lineality space,
/// rays primitive, everything deduplicated and sorted, and only extreme
/// members kept, so two canonical forms describe the same set iff they are
/// equal componentwise.
struct GeneratorForm {
  Index dim = 0;
  std::vector<RVector> points;
  std::vector<RVector> rays;
  std::vector<RVector> lineality;

  static GeneratorForm empty(Index dim);
  static GeneratorForm singlePoint(const RVector& p);

  bool isEmpty() const { return points.empty(); }

  bool operator==(const GeneratorForm& other) const;
};

/// Canonical form of the same set; runs exact LPs to prune non-extreme
/// generators and to surface lineality hidden in the ray set.
GeneratorForm canonicalizeGenerators(const GeneratorForm& g);

}  // namespace polycalc
