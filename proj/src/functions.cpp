#include "polycalc/functions.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/lp.hpp"
#include "polycalc/set_ops.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace polycalc {

std::ostream& operator<<(std::ostream& out, const ExtendedValue& v) {
  return out << (v.isFinite() ? toString(v.value()) : std::string("+inf"));
}

GPCFunction::GPCFunction(ConstraintForm domain, std::vector<Piece> pieces)
    : domain_(canonicalizeConstraints(domain)), pieces_(std::move(pieces)) {
  if (domain_.flaggedEmpty()) throw Error(ErrorCode::EmptySet, "function domain");
  if (pieces_.empty()) throw std::invalid_argument("function needs at least one piece");
  for (const Piece& p : pieces_) {
    if (p.slope.size() != domain_.dim)
      throw Error(ErrorCode::DimensionMismatch, "piece slope");
  }
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
    const int c = lexCompare(a.slope, b.slope);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  });
  pieces_.erase(std::unique(pieces_.begin(), pieces_.end()), pieces_.end());
}

ExtendedValue evaluate(const GPCFunction& f, const RVector& x) {
  if (x.size() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "evaluate");
  if (!f.domain().satisfied(x)) return ExtendedValue::infinity();
  Rational best = f.pieces().front().slope.dot(x) + f.pieces().front().offset;
  for (size_t k = 1; k < f.pieces().size(); ++k) {
    const Rational v = f.pieces()[k].slope.dot(x) + f.pieces()[k].offset;
    if (v > best) best = v;
  }
  return ExtendedValue::finite(best);
}

std::vector<Index> activePieces(const GPCFunction& f, const RVector& x) {
  const ExtendedValue fx = evaluate(f, x);
  if (!fx.isFinite()) throw Error(ErrorCode::PointNotInDomain, "active pieces");
  std::vector<Index> active;
  for (size_t k = 0; k < f.pieces().size(); ++k) {
    if (f.pieces()[k].slope.dot(x) + f.pieces()[k].offset == fx.value())
      active.push_back(static_cast<Index>(k));
  }
  return active;
}

Polyhedron epigraph(const GPCFunction& f) {
  const ConstraintForm& d = f.domain();
  const Index n = f.dim();
  ConstraintForm c = ConstraintForm::universe(n + 1);
  c.eqLhs = RMatrix(d.eqCount(), n + 1);
  c.eqLhs.leftCols(n) = d.eqLhs;
  c.eqLhs.col(n).setZero();
  c.eqRhs = d.eqRhs;
  for (Index i = 0; i < d.ineqCount(); ++i)
    c.appendInequality(appended(d.ineqLhs.row(i).transpose(), Rational(0)), d.ineqRhs(i));
  for (const Piece& p : f.pieces())
    c.appendInequality(appended(p.slope, Rational(-1)), -p.offset);
  return Polyhedron::fromConstraints(c);
}

GPCFunction fromEpigraph(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::NotAnEpigraph, "empty set");
  if (p.dim() < 2) throw Error(ErrorCode::DimensionMismatch, "epigraph needs dim >= 2");
  const ConstraintForm& c = p.constraints();
  const Index n = p.dim() - 1;

  // A set extending downward along t has value -infinity somewhere: improper.
  {
    bool downward = true;
    for (Index i = 0; i < c.eqCount() && downward; ++i)
      if (c.eqLhs(i, n) != 0) downward = false;
    for (Index i = 0; i < c.ineqCount() && downward; ++i)
      if (c.ineqLhs(i, n) < 0) downward = false;
    if (downward) throw Error(ErrorCode::NotAnEpigraph, "unbounded below");
  }

  RMatrix eqLhs = c.eqLhs;
  RVector eqRhs = c.eqRhs;
  RMatrix ineqLhs = c.ineqLhs;
  RVector ineqRhs = c.ineqRhs;

  ConstraintForm domain = ConstraintForm::universe(n);
  std::vector<Piece> pieces;

  // An equality row carrying t pins the value to an affine function of x;
  // eliminate t from every other row against it, read the piece off it, and
  // drop its upper half (the set is the graph, the function its height).
  Index pin = -1;
  for (Index i = 0; i < eqLhs.rows(); ++i) {
    if (eqLhs(i, n) != 0) {
      pin = i;
      break;
    }
  }
  if (pin >= 0) {
    const Rational t = eqLhs(pin, n);
    for (Index i = 0; i < eqLhs.rows(); ++i) {
      if (i == pin || eqLhs(i, n) == 0) continue;
      const Rational f = eqLhs(i, n) / t;
      eqLhs.row(i) -= f * eqLhs.row(pin);
      eqRhs(i) -= f * eqRhs(pin);
    }
    for (Index i = 0; i < ineqLhs.rows(); ++i) {
      if (ineqLhs(i, n) == 0) continue;
      const Rational f = ineqLhs(i, n) / t;
      ineqLhs.row(i) -= f * eqLhs.row(pin);
      ineqRhs(i) -= f * eqRhs(pin);
    }
    pieces.push_back({RVector(-eqLhs.row(pin).head(n).transpose() / t), eqRhs(pin) / t});
  }

  for (Index i = 0; i < eqLhs.rows(); ++i) {
    if (i == pin) continue;
    assert(eqLhs(i, n) == 0);
    domain.appendEquality(eqLhs.row(i).head(n).transpose(), eqRhs(i));
  }
  for (Index i = 0; i < ineqLhs.rows(); ++i) {
    const Rational t = ineqLhs(i, n);
    const RVector head = ineqLhs.row(i).head(n).transpose();
    if (t == 0) {
      domain.appendInequality(head, ineqRhs(i));
    } else if (t < 0) {
      pieces.push_back({RVector(head / -t), ineqRhs(i) / t});
    } else {
      throw Error(ErrorCode::NotAnEpigraph, "not closed upward");
    }
  }
  assert(!pieces.empty());
  return GPCFunction(std::move(domain), std::move(pieces));
}

std::vector<PWLCell> pwlDecompose(const GPCFunction& f) {
  std::vector<PWLCell> cells;
  for (size_t k = 0; k < f.pieces().size(); ++k) {
    ConstraintForm region = f.domain();
    for (size_t i = 0; i < f.pieces().size(); ++i) {
      if (i == k) continue;
      region.appendInequality(f.pieces()[i].slope - f.pieces()[k].slope,
                              f.pieces()[k].offset - f.pieces()[i].offset);
    }
    Polyhedron body = Polyhedron::fromConstraints(region);
    if (body.isEmpty()) continue;
    cells.push_back({std::move(body), f.pieces()[k].slope, f.pieces()[k].offset});
  }
  return cells;
}

GPCFunction add(const GPCFunction& a, const GPCFunction& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "function sum");
  ConstraintForm domain = a.domain();
  const ConstraintForm& db = b.domain();
  for (Index i = 0; i < db.eqCount(); ++i)
    domain.appendEquality(db.eqLhs.row(i).transpose(), db.eqRhs(i));
  for (Index i = 0; i < db.ineqCount(); ++i)
    domain.appendInequality(db.ineqLhs.row(i).transpose(), db.ineqRhs(i));
  domain = canonicalizeConstraints(domain);
  if (domain.flaggedEmpty())
    throw Error(ErrorCode::EmptyDomainIntersection, "function sum");

  // max_k a_k + max_l b_l = max_{k,l} (a_k + b_l): pairwise sums.
  std::vector<Piece> pieces;
  for (const Piece& pa : a.pieces())
    for (const Piece& pb : b.pieces())
      pieces.push_back({pa.slope + pb.slope, pa.offset + pb.offset});
  return GPCFunction(std::move(domain), std::move(pieces));
}

GPCFunction directionalDerivative(const GPCFunction& f, const RVector& x) {
  const ExtendedValue fx = evaluate(f, x);
  if (!fx.isFinite()) throw Error(ErrorCode::PointNotInDomain, "directional derivative");
  const Polyhedron domainSet = Polyhedron::fromConstraints(f.domain());
  const Polyhedron cone = tangentCone(domainSet, x);
  std::vector<Piece> pieces;
  for (Index j : activePieces(f, x)) pieces.push_back({f.pieces()[static_cast<size_t>(j)].slope, Rational(0)});
  return GPCFunction(cone.constraints(), std::move(pieces));
}

GPCFunction infConvolution(const GPCFunction& a, const GPCFunction& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "infimal convolution");
  return fromEpigraph(minkowskiSum(epigraph(a), epigraph(b)));
}

GPCFunction conjugate(const GPCFunction& f) {
  const std::vector<PWLCell> cells = pwlDecompose(f);
  assert(!cells.empty());
  const Index n = f.dim();

  ConstraintForm domain = ConstraintForm::universe(n);
  std::vector<Piece> pieces;
  for (const PWLCell& cell : cells) {
    const GeneratorForm& g = cell.region.generators();
    // x* - v_k must annihilate the cell's lineality and be nonpositive on
    // its rays for sup over the cell to stay finite.
    for (const RVector& w : g.lineality) domain.appendEquality(w, cell.slope.dot(w));
    for (const RVector& v : g.rays) domain.appendInequality(v, cell.slope.dot(v));
    for (const RVector& u : g.points) {
      const ExtendedValue fu = evaluate(f, u);
      assert(fu.isFinite());
      pieces.push_back({u, -fu.value()});
    }
  }
  domain = canonicalizeConstraints(domain);
  assert(!domain.flaggedEmpty());  // conjugates of proper gpcf are proper
  pieces = prunePieces(domain, std::move(pieces));
  return GPCFunction(std::move(domain), std::move(pieces));
}

Polyhedron subdifferential(const GPCFunction& f, const RVector& x) {
  const ExtendedValue fx = evaluate(f, x);
  if (!fx.isFinite()) throw Error(ErrorCode::PointNotInDomain, "subdifferential");
  GeneratorForm g = GeneratorForm::empty(f.dim());
  for (Index j : activePieces(f, x)) g.points.push_back(f.pieces()[static_cast<size_t>(j)].slope);
  for (Index i : f.domain().activeIndices(x))
    g.rays.push_back(f.domain().ineqLhs.row(i).transpose());
  g.lineality = rowspaceBasis(f.domain().eqLhs);
  return Polyhedron::fromGenerators(g);
}

ExtendedValue conjugateValueViaLP(const GPCFunction& f, const RVector& xstar) {
  if (xstar.size() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "conjugate value");
  const Polyhedron epi = epigraph(f);
  const RVector objective = appended(xstar, Rational(-1));
  const LPResult r = solve({objective, epi.constraints()});
  assert(r.status != LPStatus::Infeasible);
  if (r.status == LPStatus::Unbounded) return ExtendedValue::infinity();
  return ExtendedValue::finite(r.value);
}

bool fenchelYoungCheck(const GPCFunction& f, const RVector& x, const RVector& xstar) {
  const ExtendedValue fx = evaluate(f, x);
  if (!fx.isFinite()) throw Error(ErrorCode::PointNotInDomain, "Fenchel-Young check");
  const ExtendedValue star = conjugateValueViaLP(f, xstar);
  if (!star.isFinite()) return false;
  return fx.value() + star.value() == xstar.dot(x);
}

GPCFunction indicator(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "indicator");
  return GPCFunction(p.constraints(), {Piece{zeroVector(p.dim()), Rational(0)}});
}

std::vector<Piece> prunePieces(const ConstraintForm& domain, std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    const int c = lexCompare(a.slope, b.slope);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  });
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  const Index n = domain.dim;
  for (size_t k = 0; pieces.size() > 1 && k < pieces.size();) {
    // max of (this piece - max of the others) over the domain, as an LP over
    // the epigraph of the others.
    ConstraintForm feasible = ConstraintForm::universe(n + 1);
    feasible.eqLhs = RMatrix(domain.eqCount(), n + 1);
    feasible.eqLhs.leftCols(n) = domain.eqLhs;
    feasible.eqLhs.col(n).setZero();
    feasible.eqRhs = domain.eqRhs;
    for (Index i = 0; i < domain.ineqCount(); ++i)
      feasible.appendInequality(appended(domain.ineqLhs.row(i).transpose(), Rational(0)),
                                domain.ineqRhs(i));
    for (size_t j = 0; j < pieces.size(); ++j) {
      if (j == k) continue;
      feasible.appendInequality(appended(pieces[j].slope, Rational(-1)), -pieces[j].offset);
    }
    const LPResult r = solveBasic({appended(pieces[k].slope, Rational(-1)), feasible});
    assert(r.status != LPStatus::Infeasible);
    if (r.status == LPStatus::Optimal && r.value + pieces[k].offset <= 0) {
      pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return pieces;
}

}  // namespace polycalc
