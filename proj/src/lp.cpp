#include "polycalc/lp.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"

#include <cassert>

namespace polycalc {

namespace {

// Dense simplex tableau over exact rationals. Columns are the structural
// variables followed by one slack per row (plus one artificial column during
// phase one); the basis holds one column index per row.
struct Tableau {
  RMatrix a;                // rows x cols
  RVector rhs;              // rows
  RVector obj;              // reduced cost row, cols
  Rational objValue = 0;    // objective value of the current basic solution
  std::vector<Index> basis; // basic column per row

  Index rows() const { return a.rows(); }
  Index cols() const { return a.cols(); }

  void pivot(Index row, Index col) {
    objValue += obj(col) * rhs(row) / a(row, col);
    const Rational p = a(row, col);
    a.row(row) /= p;
    rhs(row) /= p;
    for (Index i = 0; i < rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      a.row(i) -= f * a.row(row);
      rhs(i) -= f * rhs(row);
    }
    if (obj(col) != 0) obj -= obj(col) * a.row(row).transpose();
    basis[static_cast<size_t>(row)] = col;
  }

  // Zero out reduced costs on basic columns.
  void priceOut() {
    for (Index i = 0; i < rows(); ++i) {
      const Index b = basis[static_cast<size_t>(i)];
      if (obj(b) != 0) obj -= obj(b) * a.row(i).transpose();
    }
  }

  // Bland's rule: entering column = lowest index with positive reduced cost;
  // leaving row = lowest basic index among the ratio-test minimizers.
  // Returns the entering column when unbounded, -1 at optimality.
  Index maximize() {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < cols(); ++j) {
        if (obj(j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return -1;
      Index leave = -1;
      Rational best;
      for (Index i = 0; i < rows(); ++i) {
        if (a(i, enter) <= 0) continue;
        const Rational ratio = rhs(i) / a(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best &&
             basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  void dropRow(Index row) {
    const Index last = rows() - 1;
    if (row != last) {
      a.row(row) = a.row(last);
      rhs(row) = rhs(last);
      basis[static_cast<size_t>(row)] = basis[static_cast<size_t>(last)];
    }
    a.conservativeResize(last, Eigen::NoChange);
    rhs.conservativeResize(last);
    basis.pop_back();
  }
};

struct ReducedProblem {
  bool infeasible = false;
  RVector origin;    // particular solution of the equality block
  RMatrix tangent;   // nullspace basis as columns; x = origin + tangent * t
  RMatrix ineq;      // rows x freeDim
  RVector ineqRhs;
  RVector objective; // on t
};

ReducedProblem eliminateEqualities(const LinearProgram& lp) {
  ReducedProblem red;
  const ConstraintForm& c = lp.constraints;
  if (c.eqCount() > 0) {
    auto x0 = solveAffine(c.eqLhs, c.eqRhs);
    if (!x0) {
      red.infeasible = true;
      return red;
    }
    red.origin = *x0;
    const auto basis = nullspaceBasis(c.eqLhs);
    red.tangent = RMatrix(c.dim, static_cast<Index>(basis.size()));
    for (Index j = 0; j < red.tangent.cols(); ++j) red.tangent.col(j) = basis[static_cast<size_t>(j)];
  } else {
    red.origin = zeroVector(c.dim);
    red.tangent = RMatrix::Identity(c.dim, c.dim);
  }
  red.ineq = c.ineqLhs * red.tangent;
  red.ineqRhs = c.ineqRhs - c.ineqLhs * red.origin;
  red.objective = red.tangent.transpose() * lp.objective;
  return red;
}

LPResult simplexSolve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.constraints.dim)
    throw Error(ErrorCode::DimensionMismatch, "objective vs constraints");

  LPResult result;
  const ReducedProblem red = eliminateEqualities(lp);
  if (red.infeasible) return result;

  const Index freeDim = red.tangent.cols();
  const Index nVars = 2 * freeDim;  // t = u - w with u, w >= 0
  const Index nRows = red.ineq.rows();

  Tableau tab;
  tab.a = RMatrix::Zero(nRows, nVars + nRows + 1);  // one artificial column at the end
  tab.rhs = red.ineqRhs;
  tab.basis.resize(static_cast<size_t>(nRows));
  for (Index i = 0; i < nRows; ++i) {
    tab.a.block(i, 0, 1, freeDim) = red.ineq.row(i);
    tab.a.block(i, freeDim, 1, freeDim) = -red.ineq.row(i);
    tab.a(i, nVars + i) = 1;             // slack
    tab.a(i, nVars + nRows) = -1;        // artificial
    tab.basis[static_cast<size_t>(i)] = nVars + i;
  }
  const Index artificial = nVars + nRows;

  // Phase one, single artificial variable.
  Index worst = -1;
  for (Index i = 0; i < nRows; ++i) {
    if (tab.rhs(i) < 0 && (worst < 0 || tab.rhs(i) < tab.rhs(worst))) worst = i;
  }
  if (worst >= 0) {
    tab.obj = zeroVector(tab.cols());
    tab.obj(artificial) = -1;
    tab.pivot(worst, artificial);
    tab.maximize();
    if (tab.objValue < 0) return result;  // phase-one optimum > 0: infeasible
    for (Index i = 0; i < tab.rows(); ++i) {
      if (tab.basis[static_cast<size_t>(i)] != artificial) continue;
      assert(tab.rhs(i) == 0);
      Index col = -1;
      for (Index j = 0; j < artificial; ++j) {
        if (tab.a(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.dropRow(i);
      }
      break;
    }
  }

  // Phase two: drop the artificial column so it can never re-enter.
  tab.a.conservativeResize(Eigen::NoChange, artificial);
  tab.obj = zeroVector(tab.cols());
  tab.obj.head(freeDim) = red.objective;
  tab.obj.segment(freeDim, freeDim) = -red.objective;
  tab.objValue = 0;
  for (Index i = 0; i < tab.rows(); ++i) {
    const Index b = tab.basis[static_cast<size_t>(i)];
    if (b < nVars) tab.objValue += tab.obj(b) * tab.rhs(i);
  }
  tab.priceOut();

  const Index unboundedCol = tab.maximize();

  RVector tPoint = zeroVector(freeDim);
  for (Index i = 0; i < tab.rows(); ++i) {
    const Index b = tab.basis[static_cast<size_t>(i)];
    if (b < freeDim) tPoint(b) += tab.rhs(i);
    else if (b < nVars) tPoint(b - freeDim) -= tab.rhs(i);
  }
  result.point = red.origin + red.tangent * tPoint;

  if (unboundedCol >= 0) {
    result.status = LPStatus::Unbounded;
    RVector tRay = zeroVector(freeDim);
    auto add = [&](Index var, const Rational& amount) {
      if (var < freeDim) tRay(var) += amount;
      else if (var < nVars) tRay(var - freeDim) -= amount;
    };
    add(unboundedCol, Rational(1));
    for (Index i = 0; i < tab.rows(); ++i)
      add(tab.basis[static_cast<size_t>(i)], -tab.a(i, unboundedCol));
    result.ray = primitive(red.tangent * tRay, RowSign::Keep);
    assert(lp.objective.dot(result.ray) > 0);
    return result;
  }

  result.status = LPStatus::Optimal;
  result.value = lp.objective.dot(result.point);
  return result;
}

}  // namespace

LPResult solveBasic(const LinearProgram& lp) { return simplexSolve(lp); }

LPResult solve(const LinearProgram& lp) {
  LPResult raw = simplexSolve(lp);
  if (raw.status != LPStatus::Optimal) return raw;

  const Index dim = lp.constraints.dim;
  ConstraintForm face = lp.constraints;
  face.appendEquality(lp.objective, raw.value);
  RVector point(dim);
  for (Index k = 0; k < dim; ++k) {
    const RVector axis = unitVector(dim, k);
    const LPResult low = simplexSolve({-axis, face});
    assert(low.status != LPStatus::Infeasible);
    Rational coordinate;
    if (low.status == LPStatus::Optimal) {
      coordinate = -low.value;
    } else {
      const LPResult high = simplexSolve({axis, face});
      coordinate = (high.status == LPStatus::Optimal && high.value < 0) ? high.value : Rational(0);
    }
    face.appendEquality(axis, coordinate);
    point(k) = coordinate;
  }
  raw.point = point;
  assert(lp.objective.dot(raw.point) == raw.value);
  return raw;
}

bool isBoundedAbove(const RVector& objective, const ConstraintForm& region) {
  return simplexSolve({objective, region}).status != LPStatus::Unbounded;
}

}  // namespace polycalc
