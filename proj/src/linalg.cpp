#include "polycalc/linalg.hpp"

namespace polycalc {

RowEchelon rref(const RMatrix& m) {
  RowEchelon out;
  out.reduced = m;
  RMatrix& r = out.reduced;
  const Index rows = r.rows(), cols = r.cols();
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index pivot = -1;
    for (Index i = lead; i < rows; ++i) {
      if (r(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) r.row(pivot).swap(r.row(lead));
    r.row(lead) /= r(lead, col);
    for (Index i = 0; i < rows; ++i) {
      if (i != lead && r(i, col) != 0) r.row(i) -= r(i, col) * r.row(lead);
    }
    out.pivotCols.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::vector<RVector> nullspaceBasis(const RMatrix& m) {
  const RowEchelon re = rref(m);
  const Index cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (Index p : re.pivotCols) isPivot[p] = true;

  std::vector<RVector> basis;
  for (Index free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    RVector v = zeroVector(cols);
    v(free) = 1;
    for (Index row = 0; row < re.rank; ++row) v(re.pivotCols[row]) = -re.reduced(row, free);
    basis.push_back(primitive(v, RowSign::Canonical));
  }
  return basis;
}

std::optional<RVector> solveAffine(const RMatrix& m, const RVector& rhs) {
  RMatrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const RowEchelon re = rref(aug);
  for (Index p : re.pivotCols) {
    if (p == m.cols()) return std::nullopt;  // row 0 = 1
  }
  RVector x = zeroVector(m.cols());
  for (Index row = 0; row < re.rank; ++row) x(re.pivotCols[row]) = re.reduced(row, m.cols());
  return x;
}

std::vector<RVector> rowspaceBasis(const RMatrix& m) {
  const RowEchelon re = rref(m);
  std::vector<RVector> rows;
  for (Index i = 0; i < re.rank; ++i)
    rows.push_back(primitive(re.reduced.row(i).transpose(), RowSign::Canonical));
  return rows;
}

RMatrix stackRows(const std::vector<RVector>& rows, Index cols) {
  RMatrix m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = rows[static_cast<size_t>(i)].transpose();
  return m;
}

}  // namespace polycalc
