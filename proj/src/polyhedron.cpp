#include "polycalc/polyhedron.hpp"

#include "polycalc/double_description.hpp"
#include "polycalc/errors.hpp"

#include <cassert>

namespace polycalc {

Polyhedron Polyhedron::fromConstraints(ConstraintForm c) {
  Polyhedron p;
  p.rep_ = std::make_shared<Rep>();
  p.dim_ = c.dim;
  p.rep_->constraint = canonicalizeConstraints(c);
  p.empty_ = p.rep_->constraint->flaggedEmpty();
  return p;
}

Polyhedron Polyhedron::fromGenerators(GeneratorForm g) {
  Polyhedron p;
  p.rep_ = std::make_shared<Rep>();
  p.dim_ = g.dim;
  p.rep_->generator = canonicalizeGenerators(g);
  p.empty_ = p.rep_->generator->isEmpty();
  return p;
}

namespace {

bool isRecessionDirection(const ConstraintForm& c, const RVector& v) {
  for (Index i = 0; i < c.eqCount(); ++i)
    if (c.eqLhs.row(i).transpose().dot(v) != 0) return false;
  for (Index i = 0; i < c.ineqCount(); ++i)
    if (c.ineqLhs.row(i).transpose().dot(v) > 0) return false;
  return true;
}

bool isLineDirection(const ConstraintForm& c, const RVector& v) {
  return isRecessionDirection(c, v) && isRecessionDirection(c, RVector(-v));
}

// Debug-build check that both memoized forms describe the same set.
[[maybe_unused]] bool formsConsistent(const ConstraintForm& c, const GeneratorForm& g) {
  if (c.flaggedEmpty() != g.isEmpty()) return false;
  for (const RVector& u : g.points)
    if (!c.satisfied(u)) return false;
  for (const RVector& v : g.rays)
    if (!isRecessionDirection(c, v)) return false;
  for (const RVector& w : g.lineality)
    if (!isLineDirection(c, w)) return false;
  return true;
}

}  // namespace

const ConstraintForm& Polyhedron::constraints() const {
  std::call_once(rep_->constraintOnce, [&] {
    if (!rep_->constraint) {
      rep_->constraint = generatorToConstraint(*rep_->generator);
      assert(formsConsistent(*rep_->constraint, *rep_->generator));
    }
  });
  return *rep_->constraint;
}

const GeneratorForm& Polyhedron::generators() const {
  std::call_once(rep_->generatorOnce, [&] {
    if (!rep_->generator) {
      rep_->generator = constraintToGenerator(*rep_->constraint);
      assert(formsConsistent(*rep_->constraint, *rep_->generator));
    }
  });
  return *rep_->generator;
}

bool Polyhedron::contains(const RVector& x) const {
  return constraints().satisfied(x);
}

bool subset(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "subset");
  if (p.isEmpty()) return true;
  if (q.isEmpty()) return false;
  const GeneratorForm& g = p.generators();
  const ConstraintForm& c = q.constraints();
  for (const RVector& u : g.points)
    if (!c.satisfied(u)) return false;
  for (const RVector& v : g.rays)
    if (!isRecessionDirection(c, v)) return false;
  for (const RVector& w : g.lineality)
    if (!isLineDirection(c, w)) return false;
  return true;
}

bool setEqual(const Polyhedron& p, const Polyhedron& q) {
  return subset(p, q) && subset(q, p);
}

Index affineDimension(const Polyhedron& p) {
  if (p.isEmpty()) return -1;
  // Canonical equality rows are independent.
  return p.dim() - p.constraints().eqCount();
}

}  // namespace polycalc
