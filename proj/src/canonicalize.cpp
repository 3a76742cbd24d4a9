#include "polycalc/constraint_form.hpp"
#include "polycalc/generator_form.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/lp.hpp"

#include <algorithm>
#include <cassert>

namespace polycalc {

namespace {

struct Row {
  RVector lhs;
  Rational rhs;
};

bool rowLess(const Row& a, const Row& b) {
  const int c = lexCompare(a.lhs, b.lhs);
  if (c != 0) return c < 0;
  return a.rhs < b.rhs;
}

Row normalizedRow(Row r, RowSign sign) {
  const RVector joint = primitive(appended(r.lhs, r.rhs), sign);
  return {withoutLast(joint), joint(joint.size() - 1)};
}

ConstraintForm assemble(Index dim, const std::vector<Row>& eqs, const std::vector<Row>& ineqs) {
  ConstraintForm c = ConstraintForm::universe(dim);
  for (const Row& r : eqs) c.appendEquality(r.lhs, r.rhs);
  for (const Row& r : ineqs) c.appendInequality(r.lhs, r.rhs);
  return c;
}

// Eliminates the pivot-column components of an inequality against the
// echelonized equality block, so distinct inequalities that agree on the
// affine subspace coincide afterwards.
Row reduceAgainstEqualities(Row row, const std::vector<Row>& eqs,
                            const std::vector<Index>& pivots) {
  for (size_t r = 0; r < eqs.size(); ++r) {
    const Rational factor = row.lhs(pivots[r]) / eqs[r].lhs(pivots[r]);
    if (factor == 0) continue;
    row.lhs -= factor * eqs[r].lhs;
    row.rhs -= factor * eqs[r].rhs;
  }
  return row;
}

}  // namespace

ConstraintForm canonicalizeConstraints(const ConstraintForm& in) {
  const Index dim = in.dim;
  std::vector<Row> eqs, ineqs;
  for (Index i = 0; i < in.eqCount(); ++i)
    eqs.push_back({in.eqLhs.row(i).transpose(), in.eqRhs(i)});
  for (Index i = 0; i < in.ineqCount(); ++i)
    ineqs.push_back({in.ineqLhs.row(i).transpose(), in.ineqRhs(i)});

  std::vector<Row> canonicalEqs;
  std::vector<Index> pivots;
  for (;;) {
    // Echelonize the equality block; a pivot in the right-hand side column
    // means the block is inconsistent.
    RMatrix aug(static_cast<Index>(eqs.size()), dim + 1);
    for (size_t i = 0; i < eqs.size(); ++i) {
      aug.block(static_cast<Index>(i), 0, 1, dim) = eqs[i].lhs.transpose();
      aug(static_cast<Index>(i), dim) = eqs[i].rhs;
    }
    const RowEchelon re = rref(aug);
    canonicalEqs.clear();
    pivots.clear();
    for (Index r = 0; r < re.rank; ++r) {
      if (re.pivotCols[static_cast<size_t>(r)] == dim) return ConstraintForm::empty(dim);
      canonicalEqs.push_back(
          {re.reduced.row(r).head(dim).transpose(), re.reduced(r, dim)});
      pivots.push_back(re.pivotCols[static_cast<size_t>(r)]);
    }

    std::vector<Row> reduced;
    for (const Row& row : ineqs) {
      Row r = normalizedRow(reduceAgainstEqualities(row, canonicalEqs, pivots), RowSign::Keep);
      if (isZero(r.lhs)) {
        if (r.rhs < 0) return ConstraintForm::empty(dim);
        continue;  // implied by the equalities
      }
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), rowLess);
    // Identical directions: the smallest right-hand side dominates.
    std::vector<Row> deduped;
    for (Row& r : reduced) {
      if (!deduped.empty() && deduped.back().lhs == r.lhs) continue;
      deduped.push_back(std::move(r));
    }
    ineqs = std::move(deduped);

    const ConstraintForm current = assemble(dim, canonicalEqs, ineqs);
    if (solveBasic({zeroVector(dim), current}).status == LPStatus::Infeasible)
      return ConstraintForm::empty(dim);

    // Inequalities that hold with equality on the whole set move into the
    // equality block, and the reduction starts over.
    std::vector<Row> implicit;
    std::vector<Row> strict;
    for (const Row& r : ineqs) {
      const LPResult low = solveBasic({-r.lhs, current});
      if (low.status == LPStatus::Optimal && -low.value == r.rhs) implicit.push_back(r);
      else strict.push_back(r);
    }
    if (implicit.empty()) break;
    for (Row& r : implicit) eqs.push_back(std::move(r));
    ineqs = std::move(strict);
  }

  // Redundancy: a row is redundant iff the maximum of its left-hand side
  // subject to the remaining rows stays within its right-hand side.
  for (size_t i = 0; i < ineqs.size();) {
    std::vector<Row> others;
    for (size_t j = 0; j < ineqs.size(); ++j)
      if (j != i) others.push_back(ineqs[j]);
    const LPResult r = solveBasic({ineqs[i].lhs, assemble(dim, canonicalEqs, others)});
    assert(r.status != LPStatus::Infeasible);
    if (r.status == LPStatus::Optimal && r.value <= ineqs[i].rhs) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  std::vector<Row> finalEqs;
  for (const Row& r : canonicalEqs) finalEqs.push_back(normalizedRow(r, RowSign::Canonical));
  std::sort(ineqs.begin(), ineqs.end(), rowLess);
  return assemble(dim, finalEqs, ineqs);
}

namespace {

// Is target in cone(rays) + span(lines)? Exact LP feasibility in the
// combination coefficients.
bool inConicHull(const RVector& target, const std::vector<RVector>& rays,
                 const std::vector<RVector>& lines) {
  const Index nRays = static_cast<Index>(rays.size());
  const Index vars = nRays + static_cast<Index>(lines.size());
  const Index dim = target.size();
  ConstraintForm c = ConstraintForm::universe(vars);
  RMatrix eq(dim, vars);
  for (Index j = 0; j < nRays; ++j) eq.col(j) = rays[static_cast<size_t>(j)];
  for (Index j = nRays; j < vars; ++j) eq.col(j) = lines[static_cast<size_t>(j - nRays)];
  c.eqLhs = eq;
  c.eqRhs = target;
  for (Index j = 0; j < nRays; ++j) c.appendInequality(-unitVector(vars, j), Rational(0));
  return solveBasic({zeroVector(vars), c}).status != LPStatus::Infeasible;
}

// Is target in conv(points) + cone(rays) + span(lines)?
bool inConvexHull(const RVector& target, const std::vector<RVector>& points,
                  const std::vector<RVector>& rays, const std::vector<RVector>& lines) {
  if (points.empty()) return false;
  const Index nPts = static_cast<Index>(points.size());
  const Index nRays = static_cast<Index>(rays.size());
  const Index vars = nPts + nRays + static_cast<Index>(lines.size());
  const Index dim = target.size();
  ConstraintForm c = ConstraintForm::universe(vars);
  RMatrix eq(dim + 1, vars);
  eq.setZero();
  for (Index j = 0; j < vars; ++j) {
    const RVector& g = j < nPts ? points[static_cast<size_t>(j)]
                     : j < nPts + nRays ? rays[static_cast<size_t>(j - nPts)]
                                        : lines[static_cast<size_t>(j - nPts - nRays)];
    eq.col(j).head(dim) = g;
    if (j < nPts) eq(dim, j) = 1;  // convex weights sum to one
  }
  c.eqLhs = eq;
  c.eqRhs = appended(target, Rational(1));
  for (Index j = 0; j < nPts + nRays; ++j)
    c.appendInequality(-unitVector(vars, j), Rational(0));
  return solveBasic({zeroVector(vars), c}).status != LPStatus::Infeasible;
}

std::vector<RVector> sortedUnique(std::vector<RVector> items) {
  std::sort(items.begin(), items.end(),
            [](const RVector& a, const RVector& b) { return lexCompare(a, b) < 0; });
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

GeneratorForm canonicalizeGenerators(const GeneratorForm& in) {
  if (in.points.empty()) return GeneratorForm::empty(in.dim);
  const Index dim = in.dim;

  std::vector<RVector> lineality = in.lineality;
  std::vector<RVector> rays = in.rays;
  std::vector<RVector> points = in.points;

  std::vector<RVector> linRows;  // echelonized, leading-one rows
  std::vector<Index> linPivots;
  for (;;) {
    const RowEchelon re = rref(stackRows(lineality, dim));
    linRows.clear();
    linPivots.clear();
    for (Index r = 0; r < re.rank; ++r) {
      linRows.push_back(re.reduced.row(r).transpose());
      linPivots.push_back(re.pivotCols[static_cast<size_t>(r)]);
    }

    auto reduceModLineality = [&](RVector v) {
      for (size_t r = 0; r < linRows.size(); ++r) {
        const Rational f = v(linPivots[r]);
        if (f != 0) v -= f * linRows[r];
      }
      return v;
    };

    std::vector<RVector> reducedRays;
    for (const RVector& v : rays) {
      RVector r = primitive(reduceModLineality(v), RowSign::Keep);
      if (!isZero(r)) reducedRays.push_back(std::move(r));
    }
    rays = sortedUnique(std::move(reducedRays));

    std::vector<RVector> reducedPoints;
    for (const RVector& u : points) reducedPoints.push_back(reduceModLineality(u));
    points = sortedUnique(std::move(reducedPoints));

    // A ray whose opposite also lies in the cone spans a line that belongs
    // in the lineality basis.
    bool promoted = false;
    for (const RVector& r : rays) {
      if (inConicHull(-r, rays, linRows)) {
        lineality = linRows;
        lineality.push_back(r);
        promoted = true;
        break;
      }
    }
    if (!promoted) break;
  }

  // Drop rays that the remaining rays already generate.
  for (size_t i = 0; i < rays.size();) {
    std::vector<RVector> others;
    for (size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (inConicHull(rays[i], others, linRows)) {
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  // Drop points that are convex combinations of the rest.
  for (size_t i = 0; i < points.size();) {
    std::vector<RVector> others;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (inConvexHull(points[i], others, rays, linRows)) {
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  GeneratorForm out = GeneratorForm::empty(dim);
  out.points = std::move(points);
  out.rays = std::move(rays);
  for (const RVector& w : linRows) out.lineality.push_back(primitive(w, RowSign::Canonical));
  return out;
}

}  // namespace polycalc
