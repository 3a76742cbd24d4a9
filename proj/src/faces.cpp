#include "polycalc/faces.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace polycalc {

namespace {

// F_J as a raw (non-canonical) system: rows in J turned into equalities.
ConstraintForm faceSystem(const ConstraintForm& c, const std::vector<Index>& indices) {
  ConstraintForm out = ConstraintForm::universe(c.dim);
  out.eqLhs = c.eqLhs;
  out.eqRhs = c.eqRhs;
  std::vector<bool> tight(static_cast<size_t>(c.ineqCount()), false);
  for (Index i : indices) tight[static_cast<size_t>(i)] = true;
  for (Index i = 0; i < c.ineqCount(); ++i) {
    if (tight[static_cast<size_t>(i)])
      out.appendEquality(c.ineqLhs.row(i).transpose(), c.ineqRhs(i));
    else
      out.appendInequality(c.ineqLhs.row(i).transpose(), c.ineqRhs(i));
  }
  return out;
}

// Canonical active set of F_J: J plus every row tight on all of F_J.
// A max-uniform-slack LP settles the common case in one solve; only rows
// tight at its witness need the per-row minimum test.
struct CanonicalActive {
  bool nonempty = false;
  std::vector<Index> indices;
};

CanonicalActive canonicalActiveSet(const ConstraintForm& c, const std::vector<Index>& indices) {
  CanonicalActive out;
  const ConstraintForm system = faceSystem(c, indices);
  const Index dim = c.dim;

  ConstraintForm slackened = ConstraintForm::universe(dim + 1);
  slackened.eqLhs = RMatrix(system.eqCount(), dim + 1);
  slackened.eqLhs.leftCols(dim) = system.eqLhs;
  slackened.eqLhs.col(dim).setZero();
  slackened.eqRhs = system.eqRhs;
  for (Index i = 0; i < system.ineqCount(); ++i)
    slackened.appendInequality(appended(system.ineqLhs.row(i).transpose(), Rational(1)),
                               system.ineqRhs(i));
  slackened.appendInequality(unitVector(dim + 1, dim), Rational(1));

  const LPResult slack = solveBasic({unitVector(dim + 1, dim), slackened});
  if (slack.status == LPStatus::Infeasible) return out;
  assert(slack.status == LPStatus::Optimal);
  // A negative optimum means the face system itself is infeasible (the slack
  // variable relaxed it).
  if (slack.value < 0) return out;

  out.nonempty = true;
  out.indices = indices;
  if (slack.value > 0) {
    std::sort(out.indices.begin(), out.indices.end());
    return out;
  }

  const RVector witness = slack.point.head(dim);
  std::vector<bool> inJ(static_cast<size_t>(c.ineqCount()), false);
  for (Index i : indices) inJ[static_cast<size_t>(i)] = true;
  for (Index i = 0; i < c.ineqCount(); ++i) {
    if (inJ[static_cast<size_t>(i)]) continue;
    const RVector row = c.ineqLhs.row(i).transpose();
    if (row.dot(witness) != c.ineqRhs(i)) continue;  // strict somewhere
    const LPResult low = solveBasic({RVector(-row), system});
    if (low.status == LPStatus::Optimal && -low.value == c.ineqRhs(i))
      out.indices.push_back(i);
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

}  // namespace

std::vector<Index> activeSet(const Polyhedron& p, const RVector& x) {
  if (!p.contains(x)) throw Error(ErrorCode::PointNotInSet, "active set");
  return p.constraints().activeIndices(x);
}

Polyhedron faceFromIndexSet(const Polyhedron& p, const std::vector<Index>& indices) {
  return Polyhedron::fromConstraints(faceSystem(p.constraints(), indices));
}

std::vector<Face> enumerateFaces(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "face enumeration");
  const ConstraintForm& c = p.constraints();
  const Index rows = c.ineqCount();

  std::map<std::vector<Index>, Face> found;
  std::queue<std::vector<Index>> expand;

  const CanonicalActive whole = canonicalActiveSet(c, {});
  assert(whole.nonempty && whole.indices.empty());
  found.emplace(std::vector<Index>{}, Face{{}, p});
  expand.push({});

  while (!expand.empty()) {
    const std::vector<Index> base = expand.front();
    expand.pop();
    for (Index i = 0; i < rows; ++i) {
      if (std::binary_search(base.begin(), base.end(), i)) continue;
      std::vector<Index> trial = base;
      trial.insert(std::lower_bound(trial.begin(), trial.end(), i), i);
      const CanonicalActive canon = canonicalActiveSet(c, trial);
      if (!canon.nonempty || found.count(canon.indices)) continue;
      found.emplace(canon.indices, Face{canon.indices, faceFromIndexSet(p, canon.indices)});
      expand.push(canon.indices);
    }
  }

  std::vector<Face> faces;
  for (auto& [key, face] : found) faces.push_back(std::move(face));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    const Index da = affineDimension(a.body), db = affineDimension(b.body);
    if (da != db) return da < db;
    return a.activeSet < b.activeSet;
  });
  return faces;
}

RVector exposingFunctional(const Polyhedron& p, const Face& face) {
  const ConstraintForm& c = p.constraints();
  RVector functional = zeroVector(p.dim());
  if (face.activeSet.empty()) return functional;
  for (Index i : face.activeSet) functional -= c.ineqLhs.row(i).transpose();
  return functional / Rational(static_cast<long>(face.activeSet.size()));
}

RVector relativeInteriorPoint(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "relative interior point");
  const GeneratorForm& g = p.generators();
  RVector x = zeroVector(p.dim());
  for (const RVector& u : g.points) x += u;
  x /= Rational(static_cast<long>(g.points.size()));
  for (const RVector& v : g.rays) x += v;
  return x;
}

}  // namespace polycalc
