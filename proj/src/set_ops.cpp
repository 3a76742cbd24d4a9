#include "polycalc/set_ops.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/faces.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/lp.hpp"

#include <cassert>

namespace polycalc {

namespace {

void requireSameDim(const Polyhedron& a, const Polyhedron& b, const char* what) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

Polyhedron minkowskiSum(const Polyhedron& a, const Polyhedron& b) {
  requireSameDim(a, b, "minkowski sum");
  if (a.isEmpty() || b.isEmpty()) return Polyhedron::fromGenerators(GeneratorForm::empty(a.dim()));
  const GeneratorForm& ga = a.generators();
  const GeneratorForm& gb = b.generators();
  GeneratorForm g = GeneratorForm::empty(a.dim());
  for (const RVector& u : ga.points)
    for (const RVector& v : gb.points) g.points.push_back(u + v);
  g.rays = ga.rays;
  g.rays.insert(g.rays.end(), gb.rays.begin(), gb.rays.end());
  g.lineality = ga.lineality;
  g.lineality.insert(g.lineality.end(), gb.lineality.begin(), gb.lineality.end());
  return Polyhedron::fromGenerators(g);
}

Polyhedron intersection(const Polyhedron& a, const Polyhedron& b) {
  requireSameDim(a, b, "intersection");
  const ConstraintForm& ca = a.constraints();
  const ConstraintForm& cb = b.constraints();
  ConstraintForm c = ca;
  for (Index i = 0; i < cb.eqCount(); ++i)
    c.appendEquality(cb.eqLhs.row(i).transpose(), cb.eqRhs(i));
  for (Index i = 0; i < cb.ineqCount(); ++i)
    c.appendInequality(cb.ineqLhs.row(i).transpose(), cb.ineqRhs(i));
  return Polyhedron::fromConstraints(c);
}

Polyhedron image(const LinearMap& map, const Polyhedron& p) {
  if (map.cols() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "image");
  if (p.isEmpty()) return Polyhedron::fromGenerators(GeneratorForm::empty(map.rows()));
  const GeneratorForm& g = p.generators();
  GeneratorForm out = GeneratorForm::empty(map.rows());
  for (const RVector& u : g.points) out.points.push_back(map * u);
  for (const RVector& v : g.rays) out.rays.push_back(map * v);
  for (const RVector& w : g.lineality) out.lineality.push_back(map * w);
  return Polyhedron::fromGenerators(out);
}

Polyhedron preimage(const LinearMap& map, const Polyhedron& q) {
  if (map.rows() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "preimage");
  const ConstraintForm& c = q.constraints();
  ConstraintForm out = ConstraintForm::universe(map.cols());
  out.eqLhs = c.eqLhs * map;
  out.eqRhs = c.eqRhs;
  out.ineqLhs = c.ineqLhs * map;
  out.ineqRhs = c.ineqRhs;
  return Polyhedron::fromConstraints(out);
}

Polyhedron hullUnion(const std::vector<Polyhedron>& parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptySet, "hull of no sets");
  const Index dim = parts.front().dim();
  GeneratorForm g = GeneratorForm::empty(dim);
  for (const Polyhedron& p : parts) {
    if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "hull union");
    if (p.isEmpty()) continue;
    const GeneratorForm& gp = p.generators();
    g.points.insert(g.points.end(), gp.points.begin(), gp.points.end());
    g.rays.insert(g.rays.end(), gp.rays.begin(), gp.rays.end());
    g.lineality.insert(g.lineality.end(), gp.lineality.begin(), gp.lineality.end());
  }
  return Polyhedron::fromGenerators(g);
}

Polyhedron recessionCone(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "recession cone");
  const GeneratorForm& g = p.generators();
  GeneratorForm out = GeneratorForm::empty(p.dim());
  out.points.push_back(zeroVector(p.dim()));
  out.rays = g.rays;
  out.lineality = g.lineality;
  return Polyhedron::fromGenerators(out);
}

Polyhedron generatedCone(const Polyhedron& p) {
  if (p.isEmpty() || !p.contains(zeroVector(p.dim())))
    throw Error(ErrorCode::NotContainingOrigin, "generated cone");
  const GeneratorForm& g = p.generators();
  GeneratorForm out = GeneratorForm::empty(p.dim());
  out.points.push_back(zeroVector(p.dim()));
  for (const RVector& u : g.points)
    if (!isZero(u)) out.rays.push_back(u);
  out.rays.insert(out.rays.end(), g.rays.begin(), g.rays.end());
  out.lineality = g.lineality;
  return Polyhedron::fromGenerators(out);
}

Polyhedron tangentCone(const Polyhedron& p, const RVector& x) {
  if (!p.contains(x)) throw Error(ErrorCode::PointNotInSet, "tangent cone");
  const ConstraintForm& c = p.constraints();
  ConstraintForm out = ConstraintForm::universe(p.dim());
  out.eqLhs = c.eqLhs;
  out.eqRhs = zeroVector(c.eqCount());
  for (Index i : c.activeIndices(x))
    out.appendInequality(c.ineqLhs.row(i).transpose(), Rational(0));
  return Polyhedron::fromConstraints(out);
}

Polyhedron normalCone(const Polyhedron& p, const RVector& x) {
  if (!p.contains(x)) throw Error(ErrorCode::PointNotInSet, "normal cone");
  const ConstraintForm& c = p.constraints();
  GeneratorForm out = GeneratorForm::empty(p.dim());
  out.points.push_back(zeroVector(p.dim()));
  for (Index i : c.activeIndices(x)) out.rays.push_back(c.ineqLhs.row(i).transpose());
  out.lineality = rowspaceBasis(c.eqLhs);
  return Polyhedron::fromGenerators(out);
}

Polyhedron polar(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "polar");
  const GeneratorForm& g = p.generators();
  ConstraintForm c = ConstraintForm::universe(p.dim());
  for (const RVector& w : g.lineality) c.appendEquality(w, Rational(0));
  for (const RVector& u : g.points) c.appendInequality(u, Rational(1));
  for (const RVector& v : g.rays) c.appendInequality(v, Rational(0));
  return Polyhedron::fromConstraints(c);
}

Polyhedron translate(const Polyhedron& p, const RVector& shift) {
  if (shift.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "translate");
  if (p.isEmpty()) return p;
  const ConstraintForm& c = p.constraints();
  ConstraintForm out = c;
  out.eqRhs += c.eqLhs * shift;
  out.ineqRhs += c.ineqLhs * shift;
  return Polyhedron::fromConstraints(out);
}

SeparationResult separate(const Polyhedron& a, const Polyhedron& b) {
  requireSameDim(a, b, "separate");
  if (a.isEmpty() || b.isEmpty()) throw Error(ErrorCode::EmptySet, "separate");

  const Polyhedron common = intersection(a, b);
  SeparationResult result;
  if (!common.isEmpty()) {
    result.intersects = true;
    result.witness = relativeInteriorPoint(common);
    assert(a.contains(result.witness) && b.contains(result.witness));
    return result;
  }

  // Difference b - a misses the origin; a functional positive on all of its
  // generators separates strictly. Normalizing the gap to 1 turns the search
  // into one exact LP in (x*, gamma).
  const Index n = a.dim();
  const Polyhedron diff = minkowskiSum(b, image(-RMatrix::Identity(n, n), a));
  const GeneratorForm& g = diff.generators();
  ConstraintForm feasible = ConstraintForm::universe(n + 1);
  for (const RVector& w : g.lineality) feasible.appendEquality(appended(w, Rational(0)), Rational(0));
  for (const RVector& u : g.points) feasible.appendInequality(appended(-u, Rational(1)), Rational(0));
  for (const RVector& v : g.rays) feasible.appendInequality(appended(-v, Rational(0)), Rational(0));
  feasible.appendInequality(unitVector(n + 1, n), Rational(1));

  const LPResult lp = solve({unitVector(n + 1, n), feasible});
  assert(lp.status == LPStatus::Optimal && lp.value == 1);
  result.functional = lp.point.head(n);

  const LPResult sup = solve({result.functional, a.constraints()});
  const LPResult inf = solve({RVector(-result.functional), b.constraints()});
  assert(sup.status == LPStatus::Optimal && inf.status == LPStatus::Optimal);
  result.supFirst = sup.value;
  result.infSecond = -inf.value;
  assert(result.supFirst < result.infSecond);
  return result;
}

}  // namespace polycalc
