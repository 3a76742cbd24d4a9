#include "polycalc/set_ops.hpp"

#include "polycalc/errors.hpp"

#include "polycalc/lp.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

#include <doctest.h>

using namespace polycalc;

namespace {

Polyhedron unitSquare() {
  ConstraintForm c = ConstraintForm::universe(2);
  c.appendInequality(-unitVector(2, 0), Rational(0));
  c.appendInequality(-unitVector(2, 1), Rational(0));
  c.appendInequality(unitVector(2, 0), Rational(1));
  c.appendInequality(unitVector(2, 1), Rational(1));
  return Polyhedron::fromConstraints(c);
}

Polyhedron firstQuadrant() {
  ConstraintForm c = ConstraintForm::universe(2);
  c.appendInequality(-unitVector(2, 0), Rational(0));
  c.appendInequality(-unitVector(2, 1), Rational(0));
  return Polyhedron::fromConstraints(c);
}

Polyhedron pointSet(std::initializer_list<int> coords) {
  RVector v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (int c : coords) v(i++) = c;
  return Polyhedron::fromGenerators(GeneratorForm::singlePoint(v));
}

Rational maxOver(const Polyhedron& p, const RVector& objective) {
  const LPResult r = solveBasic({objective, p.constraints()});
  REQUIRE(r.status == LPStatus::Optimal);
  return r.value;
}

// 2D convex hull of points as an H-form, brute force over point pairs: a
// pair spans a facet line iff all points sit on one side of it.
Polyhedron bruteHull2D(const std::vector<RVector>& points) {
  ConstraintForm c = ConstraintForm::universe(2);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      RVector normal(2);
      normal << points[j](1) - points[i](1), points[i](0) - points[j](0);
      if (isZero(normal)) continue;
      for (const RVector& n : {normal, RVector(-normal)}) {
        const Rational rhs = n.dot(points[i]);
        bool inside = true;
        for (const RVector& p : points)
          if (n.dot(p) > rhs) inside = false;
        if (inside) c.appendInequality(n, rhs);
      }
    }
  }
  return Polyhedron::fromConstraints(c);
}

}  // namespace

TEST_CASE("minkowski sum: translation, segments, idempotent cone") {
  const Polyhedron square = unitSquare();
  const Polyhedron shifted = minkowskiSum(square, pointSet({1, 1}));
  CHECK(setEqual(shifted, translate(square, RVector(unitVector(2, 0) + unitVector(2, 1)))));

  GeneratorForm segX = GeneratorForm::empty(2), segY = GeneratorForm::empty(2);
  segX.points.push_back(zeroVector(2));
  segX.points.push_back(unitVector(2, 0));
  segY.points.push_back(zeroVector(2));
  segY.points.push_back(unitVector(2, 1));
  const Polyhedron sum =
      minkowskiSum(Polyhedron::fromGenerators(segX), Polyhedron::fromGenerators(segY));
  CHECK(setEqual(sum, square));
  CHECK(sum.generators().points.size() == 4);  // vertex oracle result

  const Polyhedron quadrant = firstQuadrant();
  CHECK(setEqual(minkowskiSum(quadrant, quadrant), quadrant));
}

TEST_CASE("empty inputs propagate") {
  const Polyhedron square = unitSquare();
  const Polyhedron none = Polyhedron::fromGenerators(GeneratorForm::empty(2));
  CHECK(minkowskiSum(square, none).isEmpty());
  CHECK(intersection(square, none).isEmpty());
  CHECK(image(RMatrix(RMatrix::Identity(2, 2)), none).isEmpty());
  CHECK(preimage(RMatrix(RMatrix::Identity(2, 2)), none).isEmpty());
  CHECK(hullUnion({none, none}).isEmpty());
  CHECK(setEqual(hullUnion({none, square}), square));
  CHECK(subset(none, square));
  CHECK_FALSE(subset(square, none));
}

TEST_CASE("minkowski membership agrees with the split LP on random points") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const Polyhedron p = testing::randomNonemptyPolyhedron(rng, 2, 5, 1);
    const Polyhedron q = testing::randomNonemptyPolyhedron(rng, 2, 5, 1);
    const Polyhedron sum = minkowskiSum(p, q);
    for (int s = 0; s < 7; ++s) {
      const RVector x = testing::randomVector(rng, 2, 8, 2);
      CHECK(sum.contains(x) == testing::minkowskiMemberByLP(p, q, x));
    }
  }
}

TEST_CASE("intersection") {
  const Polyhedron square = unitSquare();
  ConstraintForm halfC = ConstraintForm::universe(2);
  halfC.appendInequality(unitVector(2, 0), ratio(1, 2));
  const Polyhedron half = intersection(square, Polyhedron::fromConstraints(halfC));

  testing::Rng rng(59);
  for (int s = 0; s < 100; ++s) {
    const RVector x = testing::randomVector(rng, 2, 3, 4);
    CHECK(half.contains(x) ==
          (square.contains(x) && x(0) <= ratio(1, 2)));
  }
  CHECK(setEqual(intersection(square, square), square));
  CHECK(intersection(translate(square, RVector(3 * unitVector(2, 0))), square).isEmpty());
}

TEST_CASE("image and preimage") {
  const Polyhedron square = unitSquare();
  RMatrix projection(1, 2);
  projection << 1, 0;
  const Polyhedron segment = image(projection, square);
  const GeneratorForm& g = segment.generators();
  REQUIRE(g.points.size() == 2);  // the vertex images 0 and 1
  CHECK(g.points[0](0) == 0);
  CHECK(g.points[1](0) == 1);

  CHECK(setEqual(image(RMatrix(RMatrix::Identity(2, 2)), square), square));
  const Polyhedron origin = image(RMatrix(RMatrix::Zero(2, 2)), square);
  CHECK(setEqual(origin, pointSet({0, 0})));

  const Polyhedron strip = preimage(projection, segment);
  testing::Rng rng(61);
  for (int s = 0; s < 100; ++s) {
    const RVector x = testing::randomVector(rng, 2, 5, 3);
    CHECK(strip.contains(x) == (x(0) >= 0 && x(0) <= 1));
  }
  CHECK(setEqual(preimage(RMatrix(RMatrix::Identity(2, 2)), square), square));

  // Preimage of a point under the zero map: empty unless the point is 0.
  RMatrix zero(2, 2);
  zero.setZero();
  CHECK(preimage(zero, pointSet({1, 0})).isEmpty());
  CHECK(setEqual(preimage(zero, pointSet({0, 0})),
                 Polyhedron::fromConstraints(ConstraintForm::universe(2))));
}

TEST_CASE("hull of a union") {
  const Polyhedron a = pointSet({0, 0});
  const Polyhedron b = pointSet({1, 1});
  const Polyhedron segment = hullUnion({a, b});
  RVector mid(2);
  mid << ratio(1, 2), ratio(1, 2);
  CHECK(segment.contains(mid));
  CHECK(affineDimension(segment) == 1);

  const Polyhedron square = unitSquare();
  const Polyhedron far = translate(square, RVector(2 * unitVector(2, 0)));
  const Polyhedron hull = hullUnion({square, far});
  std::vector<RVector> corners;
  for (const RVector& u : square.generators().points) corners.push_back(u);
  for (const RVector& u : far.generators().points) corners.push_back(u);
  REQUIRE(corners.size() == 8);
  CHECK(setEqual(hull, bruteHull2D(corners)));
  CHECK(hull.generators().points.size() == 4);  // 3x1 rectangle

  CHECK(setEqual(hullUnion({square}), square));
  // Three parts, one of them unbounded and swallowing the rest.
  ConstraintForm halfplane = ConstraintForm::universe(2);
  halfplane.appendInequality(unitVector(2, 0), Rational(4));
  const Polyhedron big = Polyhedron::fromConstraints(halfplane);
  CHECK(setEqual(hullUnion({square, big, far}), big));
  CHECK(subset(square, hull));
  CHECK(subset(far, hull));
  // Minimality spot check: the hull sits inside any candidate containing
  // both parts.
  ConstraintForm bigC = ConstraintForm::universe(2);
  bigC.appendInequality(-unitVector(2, 0), Rational(0));
  const Polyhedron candidate = Polyhedron::fromConstraints(bigC);
  CHECK(subset(hull, candidate));
}

TEST_CASE("recession cone examples and route agreement") {
  const Polyhedron square = unitSquare();
  CHECK(setEqual(recessionCone(square), pointSet({0, 0})));

  const Polyhedron quadrant = firstQuadrant();
  CHECK(setEqual(recessionCone(quadrant), quadrant));

  ConstraintForm wedgeC = ConstraintForm::universe(2);
  wedgeC.appendInequality(-unitVector(2, 0), Rational(0));
  wedgeC.appendInequality(RVector(unitVector(2, 0) - unitVector(2, 1)), Rational(0));
  const Polyhedron wedge = Polyhedron::fromConstraints(wedgeC);
  const Polyhedron cone = recessionCone(wedge);
  const GeneratorForm& g = cone.generators();
  REQUIRE(g.rays.size() == 2);
  CHECK(toString(g.rays[0]) == "0 1");
  CHECK(toString(g.rays[1]) == "1 1");

  testing::Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const Polyhedron p = testing::randomNonemptyPolyhedron(rng, 3, 6, 1);
    // Homogenized constraint route.
    const ConstraintForm& c = p.constraints();
    ConstraintForm h = ConstraintForm::universe(3);
    h.eqLhs = c.eqLhs;
    h.eqRhs = zeroVector(c.eqCount());
    h.ineqLhs = c.ineqLhs;
    h.ineqRhs = zeroVector(c.ineqCount());
    CHECK(setEqual(recessionCone(p), Polyhedron::fromConstraints(h)));
  }
  CHECK_THROWS_AS(recessionCone(Polyhedron::fromGenerators(GeneratorForm::empty(2))),
                  Error);
}

TEST_CASE("generated cone") {
  const Polyhedron square = unitSquare();
  const Polyhedron cone = generatedCone(square);
  CHECK(setEqual(cone, firstQuadrant()));

  CHECK(setEqual(generatedCone(pointSet({0, 0})), pointSet({0, 0})));

  GeneratorForm seg = GeneratorForm::empty(2);
  seg.points.push_back(zeroVector(2));
  seg.points.push_back(RVector(unitVector(2, 0) + unitVector(2, 1)));
  const Polyhedron ray = generatedCone(Polyhedron::fromGenerators(seg));
  REQUIRE(ray.generators().rays.size() == 1);
  CHECK(toString(ray.generators().rays[0]) == "1 1");

  CHECK_THROWS_AS(generatedCone(pointSet({1, 1})), Error);
}

TEST_CASE("tangent cone examples") {
  const Polyhedron square = unitSquare();
  CHECK(setEqual(tangentCone(square, zeroVector(2)), firstQuadrant()));

  RVector mid(2);
  mid << ratio(1, 2), ratio(1, 2);
  CHECK(setEqual(tangentCone(square, mid),
                 Polyhedron::fromConstraints(ConstraintForm::universe(2))));

  ConstraintForm segC = ConstraintForm::universe(2);
  segC.appendEquality(RVector(unitVector(2, 0) + unitVector(2, 1)), Rational(1));
  segC.appendInequality(-unitVector(2, 0), Rational(0));
  segC.appendInequality(unitVector(2, 0), Rational(1));
  const Polyhedron segment = Polyhedron::fromConstraints(segC);
  const Polyhedron tangent = tangentCone(segment, unitVector(2, 0));
  ConstraintForm expected = ConstraintForm::universe(2);
  expected.appendEquality(RVector(unitVector(2, 0) + unitVector(2, 1)), Rational(0));
  expected.appendInequality(unitVector(2, 0), Rational(0));
  CHECK(setEqual(tangent, Polyhedron::fromConstraints(expected)));

  RVector outside(2);
  outside << 2, 2;
  CHECK_THROWS_AS(tangentCone(square, outside), Error);
}

TEST_CASE("tangent cone equals the generated cone of the translate") {
  testing::Rng rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const Polyhedron p = testing::randomNonemptyPolyhedron(rng, 2, 6, 1);
    std::vector<RVector> probes = p.generators().points;  // vertices
    for (int s = 0; s < 5; ++s) probes.push_back(testing::randomMember(rng, p));
    for (const RVector& x : probes) {
      CHECK(setEqual(tangentCone(p, x), generatedCone(translate(p, RVector(-x)))));
    }
  }
}

TEST_CASE("normal cone examples checked against the defining LP") {
  const Polyhedron square = unitSquare();
  const Polyhedron atCorner = normalCone(square, zeroVector(2));
  GeneratorForm expected = GeneratorForm::empty(2);
  expected.points.push_back(zeroVector(2));
  expected.rays.push_back(RVector(-unitVector(2, 0)));
  expected.rays.push_back(RVector(-unitVector(2, 1)));
  CHECK(setEqual(atCorner, Polyhedron::fromGenerators(expected)));

  RVector mid(2);
  mid << ratio(1, 2), ratio(1, 2);
  CHECK(setEqual(normalCone(square, mid), pointSet({0, 0})));

  // Segment {x1 + x2 = 1, 0 <= x1 <= 1} at (1, 0).
  ConstraintForm segC = ConstraintForm::universe(2);
  segC.appendEquality(RVector(unitVector(2, 0) + unitVector(2, 1)), Rational(1));
  segC.appendInequality(-unitVector(2, 0), Rational(0));
  segC.appendInequality(unitVector(2, 0), Rational(1));
  const Polyhedron segment = Polyhedron::fromConstraints(segC);
  const Polyhedron n = normalCone(segment, unitVector(2, 0));
  GeneratorForm expectedSeg = GeneratorForm::empty(2);
  expectedSeg.points.push_back(zeroVector(2));
  expectedSeg.rays.push_back(RVector(unitVector(2, 0) - unitVector(2, 1)));
  expectedSeg.lineality.push_back(RVector(unitVector(2, 0) + unitVector(2, 1)));
  CHECK(setEqual(n, Polyhedron::fromGenerators(expectedSeg)));

  // Defining property at every generator: max over the set equals the value
  // at the base point.
  for (const Polyhedron& set : {square, segment}) {
    const RVector x = set.contains(zeroVector(2)) ? zeroVector(2) : unitVector(2, 0);
    const Polyhedron cone = normalCone(set, x);
    const GeneratorForm& g = cone.generators();
    std::vector<RVector> gens = g.rays;
    for (const RVector& w : g.lineality) {
      gens.push_back(w);
      gens.push_back(RVector(-w));
    }
    for (const RVector& v : gens) CHECK(maxOver(set, v) == v.dot(x));
  }
}

TEST_CASE("normal cone rejects outside vectors by the defining LP") {
  testing::Rng rng(73);
  int rejected = 0;
  const Polyhedron square = unitSquare();
  const RVector x = zeroVector(2);
  const Polyhedron cone = normalCone(square, x);
  while (rejected < 20) {
    const RVector y = testing::randomVector(rng, 2, 4, 2);
    if (cone.contains(y)) continue;
    ++rejected;
    CHECK(maxOver(square, y) > y.dot(x));
  }
}

TEST_CASE("normal cone of an intersection is the sum of normal cones") {
  testing::Rng rng(79);
  int checked = 0;
  while (checked < 12) {
    const Polyhedron p = testing::randomNonemptyPolyhedron(rng, 2, 4, 1);
    const Polyhedron q = testing::randomNonemptyPolyhedron(rng, 2, 4, 1);
    const Polyhedron both = intersection(p, q);
    if (both.isEmpty()) continue;
    ++checked;
    const RVector x = testing::randomMember(rng, both);
    CHECK(setEqual(normalCone(both, x),
                   minkowskiSum(normalCone(p, x), normalCone(q, x))));
  }
}

TEST_CASE("tangent and normal cones are mutually polar") {
  testing::Rng rng(83);
  for (int trial = 0; trial < 8; ++trial) {
    const Polyhedron p = testing::randomNonemptyPolyhedron(rng, 2, 5, 1);
    std::vector<RVector> probes = p.generators().points;
    probes.push_back(testing::randomMember(rng, p));
    for (const RVector& x : probes) {
      CHECK(setEqual(polar(tangentCone(p, x)), normalCone(p, x)));
    }
  }
}

TEST_CASE("polar examples") {
  CHECK(setEqual(polar(pointSet({0, 0})),
                 Polyhedron::fromConstraints(ConstraintForm::universe(2))));

  const Polyhedron quadrant = firstQuadrant();
  ConstraintForm nonposC = ConstraintForm::universe(2);
  nonposC.appendInequality(unitVector(2, 0), Rational(0));
  nonposC.appendInequality(unitVector(2, 1), Rational(0));
  CHECK(setEqual(polar(quadrant), Polyhedron::fromConstraints(nonposC)));

  // Polar of the square: sampled dual vectors are in the polar iff the
  // support value over the square is at most one.
  const Polyhedron square = unitSquare();
  const Polyhedron dual = polar(square);
  testing::Rng rng(89);
  for (int s = 0; s < 60; ++s) {
    const RVector y = testing::randomVector(rng, 2, 4, 3);
    CHECK(dual.contains(y) == (maxOver(square, y) <= 1));
  }
  CHECK_THROWS_AS(polar(Polyhedron::fromGenerators(GeneratorForm::empty(2))), Error);
}

TEST_CASE("separation of disjoint halfplanes") {
  ConstraintForm leftC = ConstraintForm::universe(2);
  leftC.appendInequality(unitVector(2, 0), Rational(0));
  ConstraintForm rightC = ConstraintForm::universe(2);
  rightC.appendInequality(-unitVector(2, 0), Rational(-1));
  const SeparationResult r =
      separate(Polyhedron::fromConstraints(leftC), Polyhedron::fromConstraints(rightC));
  REQUIRE_FALSE(r.intersects);
  CHECK(r.supFirst < r.infSecond);
  CHECK(toString(r.functional) == "1 0");
  CHECK(r.supFirst == 0);
  CHECK(r.infSecond == 1);
}

TEST_CASE("separation: intersecting squares and far points") {
  const Polyhedron square = unitSquare();
  const Polyhedron shifted = translate(square, RVector(ratio(1, 2) * unitVector(2, 0)));
  const SeparationResult overlap = separate(square, shifted);
  REQUIRE(overlap.intersects);
  CHECK(square.contains(overlap.witness));
  CHECK(shifted.contains(overlap.witness));

  const SeparationResult gap = separate(pointSet({0, 0}), pointSet({3, 4}));
  REQUIRE_FALSE(gap.intersects);
  CHECK(gap.supFirst < gap.infSecond);
  // Certificate verified by both support LPs.
  CHECK(maxOver(pointSet({0, 0}), gap.functional) == gap.supFirst);
  CHECK(-maxOver(pointSet({3, 4}), RVector(-gap.functional)) == gap.infSecond);

  CHECK_THROWS_AS(separate(square, Polyhedron::fromGenerators(GeneratorForm::empty(2))),
                  Error);
}
