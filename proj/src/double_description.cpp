#include "polycalc/double_description.hpp"

#include "polycalc/linalg.hpp"

#include <cassert>

namespace polycalc {

namespace detail {

namespace {

struct TrackedRay {
  RVector vec;
  std::vector<bool> tight;  // per input row, valid for processed rows only
};

// p and n are adjacent iff no third ray is tight on every processed row on
// which both of them are tight.
bool adjacent(const std::vector<TrackedRay>& rays, size_t p, size_t n, Index processed) {
  for (size_t r = 0; r < rays.size(); ++r) {
    if (r == p || r == n) continue;
    bool covers = true;
    for (Index j = 0; j < processed; ++j) {
      if (rays[p].tight[static_cast<size_t>(j)] && rays[n].tight[static_cast<size_t>(j)] &&
          !rays[r].tight[static_cast<size_t>(j)]) {
        covers = false;
        break;
      }
    }
    if (covers) return false;
  }
  return true;
}

}  // namespace

ConeGenerators coneFromInequalities(const RMatrix& rows) {
  const Index dim = rows.cols();
  const Index total = rows.rows();

  std::vector<RVector> lin;
  for (Index d = 0; d < dim; ++d) lin.push_back(unitVector(dim, d));
  std::vector<TrackedRay> rays;

  for (Index k = 0; k < total; ++k) {
    const RVector row = rows.row(k).transpose();

    Index hit = -1;
    for (size_t i = 0; i < lin.size(); ++i) {
      if (row.dot(lin[i]) != 0) {
        hit = static_cast<Index>(i);
        break;
      }
    }

    if (hit >= 0) {
      // The constraint cuts the lineality space: one basis vector turns into
      // a ray on the strict side, the rest (and all rays) are projected onto
      // the hyperplane.
      RVector down = lin[static_cast<size_t>(hit)];
      if (row.dot(down) > 0) down = -down;
      const Rational scale = row.dot(down);
      std::vector<RVector> kept;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<Index>(i) == hit) continue;
        kept.push_back(lin[i] - (row.dot(lin[i]) / scale) * down);
      }
      lin = std::move(kept);
      for (TrackedRay& r : rays) {
        r.vec = primitive(r.vec - (row.dot(r.vec) / scale) * down, RowSign::Keep);
        r.tight[static_cast<size_t>(k)] = true;
      }
      TrackedRay fresh;
      fresh.vec = primitive(down, RowSign::Keep);
      fresh.tight.assign(static_cast<size_t>(total), false);
      for (Index j = 0; j < k; ++j) fresh.tight[static_cast<size_t>(j)] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<size_t> pos, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      const Rational s = row.dot(rays[i].vec);
      if (s == 0) {
        rays[i].tight[static_cast<size_t>(k)] = true;
      } else if (s > 0) {
        pos.push_back(i);
      } else {
        neg.push_back(i);
      }
    }
    if (pos.empty()) continue;

    std::vector<TrackedRay> fresh;
    for (size_t p : pos) {
      for (size_t n : neg) {
        if (!adjacent(rays, p, n, k)) continue;
        RVector w = row.dot(rays[p].vec) * rays[n].vec - row.dot(rays[n].vec) * rays[p].vec;
        w = primitive(w, RowSign::Keep);
        assert(!isZero(w));
        bool duplicate = false;
        for (const TrackedRay& f : fresh) {
          if (f.vec == w) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        TrackedRay t;
        t.vec = std::move(w);
        t.tight.assign(static_cast<size_t>(total), false);
        for (Index j = 0; j <= k; ++j)
          t.tight[static_cast<size_t>(j)] = (rows.row(j).transpose().dot(t.vec) == 0);
        fresh.push_back(std::move(t));
      }
    }

    std::vector<TrackedRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      const bool infeasible =
          std::find(pos.begin(), pos.end(), i) != pos.end();
      if (!infeasible) next.push_back(std::move(rays[i]));
    }
    for (TrackedRay& f : fresh) next.push_back(std::move(f));
    rays = std::move(next);
  }

  ConeGenerators out;
  for (const RVector& b : lin) out.lineality.push_back(primitive(b, RowSign::Canonical));
  for (const TrackedRay& r : rays) out.rays.push_back(r.vec);
  return out;
}

}  // namespace detail

GeneratorForm constraintToGenerator(const ConstraintForm& c) {
  if (c.flaggedEmpty()) return GeneratorForm::empty(c.dim);

  RVector origin;
  RMatrix tangent;
  if (c.eqCount() > 0) {
    auto x0 = solveAffine(c.eqLhs, c.eqRhs);
    assert(x0);  // canonical nonempty form has a consistent equality block
    origin = *x0;
    const auto basis = nullspaceBasis(c.eqLhs);
    tangent = RMatrix(c.dim, static_cast<Index>(basis.size()));
    for (Index j = 0; j < tangent.cols(); ++j) tangent.col(j) = basis[static_cast<size_t>(j)];
  } else {
    origin = zeroVector(c.dim);
    tangent = RMatrix::Identity(c.dim, c.dim);
  }

  const Index d = tangent.cols();
  const RMatrix reduced = c.ineqLhs * tangent;
  const RVector offsets = c.ineqRhs - c.ineqLhs * origin;

  // Homogenize: {t : reduced t <= offsets} becomes the cone
  // {(t, s) : reduced t - offsets s <= 0, s >= 0}.
  RMatrix rows(c.ineqCount() + 1, d + 1);
  for (Index i = 0; i < c.ineqCount(); ++i) {
    rows.block(i, 0, 1, d) = reduced.row(i);
    rows(i, d) = -offsets(i);
  }
  rows.row(c.ineqCount()).setZero();
  rows(c.ineqCount(), d) = -1;

  const detail::ConeGenerators cone = detail::coneFromInequalities(rows);

  GeneratorForm g = GeneratorForm::empty(c.dim);
  for (const RVector& b : cone.lineality) {
    assert(b(d) == 0);
    g.lineality.push_back(tangent * b.head(d));
  }
  for (const RVector& r : cone.rays) {
    const Rational s = r(d);
    assert(s >= 0);
    if (s == 0) {
      g.rays.push_back(tangent * r.head(d));
    } else {
      g.points.push_back(origin + tangent * (r.head(d) / s));
    }
  }
  return canonicalizeGenerators(g);
}

ConstraintForm generatorToConstraint(const GeneratorForm& g) {
  if (g.isEmpty()) return ConstraintForm::empty(g.dim);

  // Dual cone of the homogenized generators, i.e. all (a, beta) with
  // <a, u_i> + beta <= 0, <a, v_j> <= 0 and <a, w_k> = 0.
  const Index n = g.dim;
  const Index total = static_cast<Index>(g.points.size() + g.rays.size() + 2 * g.lineality.size());
  RMatrix rows(total, n + 1);
  Index at = 0;
  for (const RVector& u : g.points) {
    rows.block(at, 0, 1, n) = u.transpose();
    rows(at, n) = 1;
    ++at;
  }
  for (const RVector& v : g.rays) {
    rows.block(at, 0, 1, n) = v.transpose();
    rows(at, n) = 0;
    ++at;
  }
  for (const RVector& w : g.lineality) {
    rows.block(at, 0, 1, n) = w.transpose();
    rows(at, n) = 0;
    ++at;
    rows.block(at, 0, 1, n) = -w.transpose();
    rows(at, n) = 0;
    ++at;
  }

  const detail::ConeGenerators dual = detail::coneFromInequalities(rows);

  ConstraintForm c = ConstraintForm::universe(n);
  for (const RVector& b : dual.lineality) c.appendEquality(b.head(n), -b(n));
  for (const RVector& r : dual.rays) c.appendInequality(r.head(n), -r(n));
  return canonicalizeConstraints(c);
}

}  // namespace polycalc
