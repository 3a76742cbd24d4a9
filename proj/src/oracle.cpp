#include "polycalc/oracle.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace polycalc::oracle {

namespace {

ConstraintForm faceSystem(const ConstraintForm& c, unsigned mask) {
  ConstraintForm out = ConstraintForm::universe(c.dim);
  out.eqLhs = c.eqLhs;
  out.eqRhs = c.eqRhs;
  for (Index i = 0; i < c.ineqCount(); ++i) {
    if (mask & (1u << i))
      out.appendEquality(c.ineqLhs.row(i).transpose(), c.ineqRhs(i));
    else
      out.appendInequality(c.ineqLhs.row(i).transpose(), c.ineqRhs(i));
  }
  return out;
}

}  // namespace

std::vector<Face> bruteForceFaces(const Polyhedron& p) {
  if (p.isEmpty()) throw Error(ErrorCode::EmptySet, "face oracle");
  const ConstraintForm& c = p.constraints();
  const Index rows = c.ineqCount();
  if (rows >= 31)
    throw std::invalid_argument("face oracle enumerates 2^p subsets; p >= 31 is not desk scale");

  std::vector<unsigned> emptyMasks;
  // For each discovered face: the generating mask and the full tight mask;
  // any J between them yields the same face.
  std::map<unsigned, Face> byTight;
  std::vector<std::pair<unsigned, unsigned>> span;

  for (unsigned mask = 0; mask < (1u << rows); ++mask) {
    bool skip = false;
    for (unsigned e : emptyMasks) {
      if ((mask & e) == e) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    for (const auto& [lo, hi] : span) {
      if ((mask & lo) == lo && (mask & ~hi) == 0) {
        skip = true;  // lo subset of mask subset of hi: already known
        break;
      }
    }
    if (skip) continue;

    const ConstraintForm system = faceSystem(c, mask);
    const LPResult feasible = solveBasic({zeroVector(c.dim), system});
    if (feasible.status == LPStatus::Infeasible) {
      emptyMasks.push_back(mask);
      continue;
    }

    unsigned tight = mask;
    for (Index i = 0; i < rows; ++i) {
      if (mask & (1u << i)) continue;
      const RVector row = c.ineqLhs.row(i).transpose();
      const LPResult low = solveBasic({RVector(-row), system});
      if (low.status == LPStatus::Optimal && -low.value == c.ineqRhs(i)) tight |= 1u << i;
    }
    span.emplace_back(mask, tight);
    if (byTight.count(tight)) continue;

    std::vector<Index> active;
    for (Index i = 0; i < rows; ++i)
      if (tight & (1u << i)) active.push_back(i);
    Polyhedron body = Polyhedron::fromConstraints(faceSystem(c, tight));
    byTight.emplace(tight, Face{std::move(active), std::move(body)});
  }

  std::vector<Face> faces;
  for (auto& [key, face] : byTight) faces.push_back(std::move(face));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    const Index da = affineDimension(a.body), db = affineDimension(b.body);
    if (da != db) return da < db;
    return a.activeSet < b.activeSet;
  });
  return faces;
}

bool sameFaces(const std::vector<Face>& a, const std::vector<Face>& b) {
  if (a.size() != b.size()) return false;
  // Both inputs arrive sorted by (dimension, active set); compare directly.
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].activeSet != b[i].activeSet) return false;
    if (!setEqual(a[i].body, b[i].body)) return false;
  }
  return true;
}

ExtendedValue directionalDerivativeQuotient(const GPCFunction& f, const RVector& x,
                                            const RVector& h) {
  const ExtendedValue fx = evaluate(f, x);
  if (!fx.isFinite()) throw Error(ErrorCode::PointNotInDomain, "difference quotient");

  // Largest step along h staying in the domain, by plain row arithmetic.
  const ConstraintForm& d = f.domain();
  for (Index i = 0; i < d.eqCount(); ++i)
    if (d.eqLhs.row(i).transpose().dot(h) != 0) return ExtendedValue::infinity();
  bool unlimited = true;
  Rational maxStep = 0;
  for (Index i = 0; i < d.ineqCount(); ++i) {
    const Rational rate = d.ineqLhs.row(i).transpose().dot(h);
    if (rate <= 0) continue;
    const Rational room = (d.ineqRhs(i) - d.ineqLhs.row(i).transpose().dot(x)) / rate;
    if (unlimited || room < maxStep) {
      maxStep = room;
      unlimited = false;
    }
  }
  if (!unlimited && maxStep == 0) return ExtendedValue::infinity();

  Rational t = 1;
  if (!unlimited && maxStep < t) t = maxStep;
  std::optional<Rational> previous;
  for (;;) {
    const ExtendedValue ft = evaluate(f, RVector(x + t * h));
    assert(ft.isFinite());
    const Rational quotient = (ft.value() - fx.value()) / t;
    if (previous && *previous == quotient) return ExtendedValue::finite(quotient);
    previous = quotient;
    t /= 2;
  }
}

ExtendedValue conjugateValue(const GPCFunction& f, const RVector& xstar) {
  return conjugateValueViaLP(f, xstar);
}

}  // namespace polycalc::oracle
