#include "polycalc/double_description.hpp"
#include "polycalc/faces.hpp"
#include "polycalc/linalg.hpp"
#include "polycalc/polyhedron.hpp"

#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace polycalc;

namespace {

ConstraintForm unitSquare() {
  ConstraintForm c = ConstraintForm::universe(2);
  c.appendInequality(-unitVector(2, 0), Rational(0));
  c.appendInequality(-unitVector(2, 1), Rational(0));
  c.appendInequality(unitVector(2, 0), Rational(1));
  c.appendInequality(unitVector(2, 1), Rational(1));
  return c;
}

std::vector<RVector> sampleGrid(testing::Rng& rng, Index dim, int count) {
  std::vector<RVector> samples;
  for (int i = 0; i < count; ++i) samples.push_back(testing::randomVector(rng, dim, 6, 3));
  return samples;
}

}  // namespace

TEST_CASE("canonicalization drops dominated rows") {
  ConstraintForm c = ConstraintForm::universe(1);
  c.appendInequality(unitVector(1, 0), Rational(1));
  c.appendInequality(unitVector(1, 0), Rational(2));
  const ConstraintForm canon = canonicalizeConstraints(c);
  CHECK(canon.eqCount() == 0);
  REQUIRE(canon.ineqCount() == 1);
  CHECK(canon.ineqLhs(0, 0) == 1);
  CHECK(canon.ineqRhs(0) == 1);
}

TEST_CASE("canonicalization surfaces implicit equalities") {
  ConstraintForm c = ConstraintForm::universe(1);
  c.appendInequality(unitVector(1, 0), Rational(0));
  c.appendInequality(-unitVector(1, 0), Rational(0));
  const ConstraintForm canon = canonicalizeConstraints(c);
  CHECK(canon.ineqCount() == 0);
  REQUIRE(canon.eqCount() == 1);
  CHECK(canon.eqLhs(0, 0) == 1);
  CHECK(canon.eqRhs(0) == 0);
}

TEST_CASE("canonicalization detects emptiness") {
  ConstraintForm c = ConstraintForm::universe(2);
  c.appendInequality(unitVector(2, 0), Rational(-1));
  c.appendInequality(-unitVector(2, 0), Rational(-1));
  CHECK(canonicalizeConstraints(c).flaggedEmpty());
  CHECK(Polyhedron::fromConstraints(c).isEmpty());
}

TEST_CASE("the empty sentinel is canonical and stable") {
  const ConstraintForm sentinel = ConstraintForm::empty(3);
  CHECK(canonicalizeConstraints(sentinel) == sentinel);
  CHECK(canonicalizeGenerators(GeneratorForm::empty(3)) == GeneratorForm::empty(3));
  const Polyhedron p = Polyhedron::fromConstraints(sentinel);
  CHECK(p.generators() == GeneratorForm::empty(3));
  CHECK(Polyhedron::fromGenerators(p.generators()).constraints() == sentinel);
}

TEST_CASE("canonicalization preserves membership and is idempotent") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = 1 + static_cast<Index>(rng() % 3);
    const ConstraintForm raw = testing::randomConstraints(rng, dim, 6, 2);
    const ConstraintForm canon = canonicalizeConstraints(raw);
    CHECK(testing::membershipAgrees(raw, canon, sampleGrid(rng, dim, 100)));
    CHECK(canonicalizeConstraints(canon) == canon);
  }
}

TEST_CASE("unit square converts to its four vertices") {
  const Polyhedron p = Polyhedron::fromConstraints(unitSquare());
  const GeneratorForm& g = p.generators();
  REQUIRE(g.points.size() == 4);
  CHECK(g.rays.empty());
  CHECK(g.lineality.empty());
  // Canonical order is lexicographic.
  CHECK(toString(g.points[0]) == "0 0");
  CHECK(toString(g.points[1]) == "0 1");
  CHECK(toString(g.points[2]) == "1 0");
  CHECK(toString(g.points[3]) == "1 1");
  // Brute force over all 2x2 subsystems agrees.
  const auto vertices = testing::bruteForceVertices(p.constraints());
  REQUIRE(vertices.size() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(vertices[i] == g.points[i]);
}

TEST_CASE("a line converts to point plus lineality") {
  ConstraintForm c = ConstraintForm::universe(2);
  c.appendEquality(unitVector(2, 1), Rational(0));
  const GeneratorForm g = Polyhedron::fromConstraints(c).generators();
  REQUIRE(g.points.size() == 1);
  CHECK(isZero(g.points[0]));
  CHECK(g.rays.empty());
  REQUIRE(g.lineality.size() == 1);
  CHECK(toString(g.lineality[0]) == "1 0");
}

TEST_CASE("empty constraint form converts to the empty generator form") {
  ConstraintForm c = ConstraintForm::universe(1);
  c.appendInequality(unitVector(1, 0), Rational(-1));
  c.appendInequality(-unitVector(1, 0), Rational(-1));
  CHECK(Polyhedron::fromConstraints(c).generators().isEmpty());
}

TEST_CASE("triangle generators convert to three facets") {
  GeneratorForm g = GeneratorForm::empty(2);
  g.points.push_back(zeroVector(2));
  g.points.push_back(unitVector(2, 0));
  g.points.push_back(unitVector(2, 1));
  const ConstraintForm c = Polyhedron::fromGenerators(g).constraints();
  CHECK(c.eqCount() == 0);
  REQUIRE(c.ineqCount() == 3);
  // Rows are sorted: -x1 <= 0, -x2 <= 0, x1 + x2 <= 1.
  CHECK(toString(RVector(c.ineqLhs.row(0).transpose())) == "-1 0");
  CHECK(c.ineqRhs(0) == 0);
  CHECK(toString(RVector(c.ineqLhs.row(1).transpose())) == "0 -1");
  CHECK(c.ineqRhs(1) == 0);
  CHECK(toString(RVector(c.ineqLhs.row(2).transpose())) == "1 1");
  CHECK(c.ineqRhs(2) == 1);
}

TEST_CASE("single point converts to equalities") {
  RVector p(2);
  p << 2, 3;
  const ConstraintForm c = Polyhedron::fromGenerators(GeneratorForm::singlePoint(p)).constraints();
  CHECK(c.ineqCount() == 0);
  REQUIRE(c.eqCount() == 2);
  CHECK(c.satisfied(p));
  RVector q(2);
  q << 2, 4;
  CHECK_FALSE(c.satisfied(q));
}

TEST_CASE("point plus ray converts to a halfline description") {
  GeneratorForm g = GeneratorForm::empty(2);
  g.points.push_back(zeroVector(2));
  g.rays.push_back(unitVector(2, 0));
  const Polyhedron p = Polyhedron::fromGenerators(g);
  const ConstraintForm& c = p.constraints();
  REQUIRE(c.eqCount() == 1);
  REQUIRE(c.ineqCount() == 1);
  testing::Rng rng(43);
  ConstraintForm expected = ConstraintForm::universe(2);
  expected.appendEquality(unitVector(2, 1), Rational(0));
  expected.appendInequality(-unitVector(2, 0), Rational(0));
  CHECK(testing::membershipAgrees(c, expected, sampleGrid(rng, 2, 200)));
}

TEST_CASE("hidden lineality in opposite rays is promoted") {
  GeneratorForm g = GeneratorForm::empty(2);
  g.points.push_back(zeroVector(2));
  g.rays.push_back(unitVector(2, 0));
  g.rays.push_back(RVector(-unitVector(2, 0)));
  const GeneratorForm canon = canonicalizeGenerators(g);
  CHECK(canon.rays.empty());
  REQUIRE(canon.lineality.size() == 1);
  CHECK(toString(canon.lineality[0]) == "1 0");
}

TEST_CASE("a hidden plane inside the ray set is promoted whole") {
  GeneratorForm g = GeneratorForm::empty(3);
  g.points.push_back(zeroVector(3));
  for (Index i = 0; i < 2; ++i) {
    g.rays.push_back(unitVector(3, i));
    g.rays.push_back(RVector(-unitVector(3, i)));
  }
  RVector mixed(3);
  mixed << 1, 1, 1;
  g.rays.push_back(mixed);
  const GeneratorForm canon = canonicalizeGenerators(g);
  REQUIRE(canon.lineality.size() == 2);
  REQUIRE(canon.rays.size() == 1);
  CHECK(toString(canon.rays[0]) == "0 0 1");  // reduced modulo the plane
}

TEST_CASE("rays without points denote the empty set") {
  GeneratorForm g = GeneratorForm::empty(2);
  g.rays.push_back(unitVector(2, 0));
  const Polyhedron p = Polyhedron::fromGenerators(g);
  CHECK(p.isEmpty());
  CHECK(p.generators().rays.empty());
}

TEST_CASE("membership basics") {
  const Polyhedron square = Polyhedron::fromConstraints(unitSquare());
  RVector mid(2), out(2);
  mid << ratio(1, 2), ratio(1, 2);
  out << 2, 0;
  CHECK(square.contains(mid));
  CHECK_FALSE(square.contains(out));
  RVector edge(2);
  edge << Rational(0), ratio(1, 2);  // on the facet -x1 <= 0
  CHECK(square.contains(edge));
}

TEST_CASE("subset and set equality") {
  const Polyhedron square = Polyhedron::fromConstraints(unitSquare());
  CHECK(setEqual(square, square));
  ConstraintForm big = ConstraintForm::universe(2);
  big.appendInequality(unitVector(2, 0), Rational(5));
  const Polyhedron half = Polyhedron::fromConstraints(big);
  CHECK(subset(square, half));
  CHECK_FALSE(subset(half, square));
}

TEST_CASE("double description kernel proven by pure arithmetic") {
  // Both inclusions checked without any LP: soundness by direct row
  // evaluation, completeness by generating the cone from subset kernels
  // (every extreme ray modulo the lineality space is the kernel direction of
  // its tight rows) and re-deriving each candidate from the kernel's output
  // via independent-subset solves.
  testing::Rng rng(223);
  for (int trial = 0; trial < 25; ++trial) {
    const Index dim = 2 + static_cast<Index>(rng() % 3);
    const Index nRows = 1 + static_cast<Index>(rng() % 6);
    RMatrix rows(nRows, dim);
    for (Index i = 0; i < nRows; ++i) {
      RVector r = testing::randomVector(rng, dim, 3, 1);
      if (isZero(r)) r = unitVector(dim, 0);
      rows.row(i) = r.transpose();
    }
    const detail::ConeGenerators cone = detail::coneFromInequalities(rows);

    // Soundness.
    for (const RVector& r : cone.rays)
      for (Index i = 0; i < nRows; ++i) CHECK(rows.row(i).transpose().dot(r) <= 0);
    for (const RVector& b : cone.lineality)
      for (Index i = 0; i < nRows; ++i) CHECK(rows.row(i).transpose().dot(b) == 0);

    // The output lineality spans the kernel of the full row system.
    const std::vector<RVector> kernel = nullspaceBasis(rows);
    REQUIRE(cone.lineality.size() == kernel.size());
    RMatrix joint(static_cast<Index>(cone.lineality.size() + kernel.size()), dim);
    Index at = 0;
    for (const RVector& b : cone.lineality) joint.row(at++) = b.transpose();
    for (const RVector& b : kernel) joint.row(at++) = b.transpose();
    CHECK(rref(joint).rank == static_cast<Index>(kernel.size()));

    // Completeness: candidates from every subset whose kernel exceeds the
    // lineality by one dimension cover all extreme directions; each must be
    // reproducible from the kernel's output.
    const Index linDim = static_cast<Index>(kernel.size());
    std::vector<Index> all(static_cast<size_t>(nRows));
    for (Index i = 0; i < nRows; ++i) all[static_cast<size_t>(i)] = i;
    const auto linEchelon = rref(stackRows(kernel, dim));
    auto reduceModKernel = [&](RVector v) {
      for (Index r = 0; r < linEchelon.rank; ++r) {
        const Index p = linEchelon.pivotCols[static_cast<size_t>(r)];
        if (v(p) != 0) v -= v(p) * linEchelon.reduced.row(r).transpose();
      }
      return v;
    };
    for (unsigned mask = 0; mask < (1u << nRows); ++mask) {
      std::vector<RVector> picked;
      for (Index i = 0; i < nRows; ++i)
        if (mask & (1u << i)) picked.push_back(rows.row(i).transpose());
      const auto sub = nullspaceBasis(stackRows(picked, dim));
      if (static_cast<Index>(sub.size()) != linDim + 1) continue;
      RVector direction = zeroVector(dim);
      for (const RVector& b : sub) {
        direction = reduceModKernel(b);
        if (!isZero(direction)) break;
      }
      if (isZero(direction)) continue;
      for (const RVector& d : {direction, RVector(-direction)}) {
        bool feasible = true;
        for (Index i = 0; i < nRows && feasible; ++i)
          if (rows.row(i).transpose().dot(d) > 0) feasible = false;
        if (!feasible) continue;
        CHECK(testing::inConicHullByEnumeration(d, cone.rays, cone.lineality));
      }
    }
  }
}

TEST_CASE("equal sets canonicalize to identical bytes") {
  testing::Rng rng(211);
  for (int trial = 0; trial < 15; ++trial) {
    const Index dim = 1 + static_cast<Index>(rng() % 3);
    const Polyhedron p =
        Polyhedron::fromConstraints(testing::randomConstraints(rng, dim, 5, 1));
    if (p.isEmpty()) continue;
    const ConstraintForm& c = p.constraints();

    // Obfuscate the H-form: scaled duplicates, positive combinations of
    // rows, and equalities restated as inequality pairs.
    ConstraintForm messy = ConstraintForm::universe(dim);
    for (Index i = 0; i < c.ineqCount(); ++i) {
      messy.appendInequality(c.ineqLhs.row(i).transpose(), c.ineqRhs(i));
      messy.appendInequality(RVector(3 * c.ineqLhs.row(i).transpose()), 3 * c.ineqRhs(i));
    }
    if (c.ineqCount() >= 2) {
      messy.appendInequality(
          RVector(c.ineqLhs.row(0).transpose() + c.ineqLhs.row(1).transpose()),
          c.ineqRhs(0) + c.ineqRhs(1));
    }
    for (Index i = 0; i < c.eqCount(); ++i) {
      messy.appendInequality(c.eqLhs.row(i).transpose(), c.eqRhs(i));
      messy.appendInequality(RVector(-c.eqLhs.row(i).transpose()), -c.eqRhs(i));
    }
    const Polyhedron q = Polyhedron::fromConstraints(messy);
    REQUIRE(setEqual(p, q));
    CHECK(q.constraints() == c);

    // Obfuscate the V-form: midpoints and positive ray combinations are
    // redundant generators.
    const GeneratorForm& g = p.generators();
    GeneratorForm noisy = g;
    if (g.points.size() >= 2)
      noisy.points.push_back(RVector((g.points[0] + g.points[1]) / 2));
    if (!g.rays.empty()) {
      noisy.rays.push_back(RVector(5 * g.rays[0]));
      if (!g.points.empty()) noisy.points.push_back(RVector(g.points[0] + g.rays[0]));
    }
    CHECK(Polyhedron::fromGenerators(noisy).generators() == g);
  }
}

TEST_CASE("classic polytopes convert exactly") {
  // 4-cube: 8 facets, 16 vertices, and back.
  ConstraintForm cube = ConstraintForm::universe(4);
  for (Index i = 0; i < 4; ++i) {
    cube.appendInequality(unitVector(4, i), Rational(1));
    cube.appendInequality(-unitVector(4, i), Rational(1));
  }
  const Polyhedron p = Polyhedron::fromConstraints(cube);
  CHECK(p.generators().points.size() == 16);
  CHECK(Polyhedron::fromGenerators(p.generators()).constraints() == p.constraints());

  // Cross-polytope in dimension 3: 6 vertices, 8 facets.
  GeneratorForm octa = GeneratorForm::empty(3);
  for (Index i = 0; i < 3; ++i) {
    octa.points.push_back(unitVector(3, i));
    octa.points.push_back(RVector(-unitVector(3, i)));
  }
  const Polyhedron o = Polyhedron::fromGenerators(octa);
  CHECK(o.constraints().ineqCount() == 8);
  CHECK(o.generators().points.size() == 6);

  // Square pyramid: the apex is a degenerate vertex where four facets meet.
  GeneratorForm pyramid = GeneratorForm::empty(3);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      RVector v(3);
      v << sx, sy, 0;
      pyramid.points.push_back(v);
    }
  RVector apex(3);
  apex << 0, 0, 1;
  pyramid.points.push_back(apex);
  const Polyhedron pyr = Polyhedron::fromGenerators(pyramid);
  CHECK(pyr.constraints().ineqCount() == 5);
  CHECK(Polyhedron::fromConstraints(pyr.constraints()).generators() == pyr.generators());
  CHECK(enumerateFaces(pyr).size() == 1 + 5 + 8 + 5);  // body, facets, edges, vertices
}

TEST_CASE("concurrent readers share one lazy conversion") {
  const Polyhedron p = Polyhedron::fromConstraints(unitSquare());
  std::vector<std::thread> workers;
  std::atomic<int> good{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&] {
      RVector mid(2);
      mid << ratio(1, 2), ratio(1, 2);
      if (p.generators().points.size() == 4 && p.contains(mid)) ++good;
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(good == 8);
}

TEST_CASE("round-trip conversion is exact on random polyhedra") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = 1 + static_cast<Index>(rng() % 4);
    const Polyhedron p =
        Polyhedron::fromConstraints(testing::randomConstraints(rng, dim, 8, 2));
    if (p.isEmpty()) continue;
    const Polyhedron back = Polyhedron::fromGenerators(p.generators());
    CHECK(setEqual(p, back));
    // Canonical forms are unique, so the round trip reproduces exact bytes.
    CHECK(back.constraints() == p.constraints());
    const Polyhedron again = Polyhedron::fromConstraints(back.constraints());
    CHECK(again.generators() == p.generators());
  }
}
