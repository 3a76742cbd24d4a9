#include "polycalc/constraint_form.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

ConstraintForm ConstraintForm::universe(Index dim) {
  ConstraintForm c;
  c.dim = dim;
  c.eqLhs = RMatrix(0, dim);
  c.eqRhs = RVector(0);
  c.ineqLhs = RMatrix(0, dim);
  c.ineqRhs = RVector(0);
  return c;
}

ConstraintForm ConstraintForm::empty(Index dim) {
  ConstraintForm c = universe(dim);
  c.appendInequality(zeroVector(dim), Rational(-1));
  return c;
}

bool ConstraintForm::flaggedEmpty() const {
  for (Index i = 0; i < ineqCount(); ++i) {
    if (ineqRhs(i) < 0 && isZero(ineqLhs.row(i).transpose())) return true;
  }
  return false;
}

bool ConstraintForm::satisfied(const RVector& x) const {
  if (x.size() != dim) throw Error(ErrorCode::DimensionMismatch, "membership test");
  for (Index i = 0; i < eqCount(); ++i) {
    if (eqLhs.row(i).transpose().dot(x) != eqRhs(i)) return false;
  }
  for (Index i = 0; i < ineqCount(); ++i) {
    if (ineqLhs.row(i).transpose().dot(x) > ineqRhs(i)) return false;
  }
  return true;
}

std::vector<Index> ConstraintForm::activeIndices(const RVector& x) const {
  if (x.size() != dim) throw Error(ErrorCode::DimensionMismatch, "active set");
  std::vector<Index> active;
  for (Index i = 0; i < ineqCount(); ++i) {
    if (ineqLhs.row(i).transpose().dot(x) == ineqRhs(i)) active.push_back(i);
  }
  return active;
}

void ConstraintForm::appendEquality(const RVector& lhs, const Rational& rhs) {
  eqLhs.conservativeResize(eqLhs.rows() + 1, dim);
  eqLhs.row(eqLhs.rows() - 1) = lhs.transpose();
  eqRhs.conservativeResize(eqRhs.size() + 1);
  eqRhs(eqRhs.size() - 1) = rhs;
}

void ConstraintForm::appendInequality(const RVector& lhs, const Rational& rhs) {
  ineqLhs.conservativeResize(ineqLhs.rows() + 1, dim);
  ineqLhs.row(ineqLhs.rows() - 1) = lhs.transpose();
  ineqRhs.conservativeResize(ineqRhs.size() + 1);
  ineqRhs(ineqRhs.size() - 1) = rhs;
}

bool ConstraintForm::operator==(const ConstraintForm& other) const {
  return dim == other.dim && eqLhs == other.eqLhs && eqRhs == other.eqRhs &&
         ineqLhs == other.ineqLhs && ineqRhs == other.ineqRhs;
}

}  // namespace polycalc
