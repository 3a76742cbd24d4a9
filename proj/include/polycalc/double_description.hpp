#pragma once

#include "polycalc/constraint_form.hpp"
#include "polycalc/generator_form.hpp"

#include <vector>

namespace polycalc {

/// Exact conversion between the two representations. Both directions run the
/// same double description kernel: constraints -> generators eliminates the
/// equality block, homogenizes with one extra coordinate and enumerates the
/// extreme rays of the resulting cone; generators -> constraints feeds the
/// kernel the dual cone of the homogenized generators. Inputs are expected
/// canonical; outputs are canonical.
GeneratorForm constraintToGenerator(const ConstraintForm& c);
ConstraintForm generatorToConstraint(const GeneratorForm& g);

namespace detail {

struct ConeGenerators {
  std::vector<RVector> lineality;
  std::vector<RVector> rays;  // extreme rays modulo the lineality space
};

/// Double description method for {z : rows z <= 0} (Motzkin et al.;
/// combinatorial adjacency test as in Fukuda & Prodon, "Double description
/// method revisited"). Constraints are inserted one at a time against an
/// initially full space.
ConeGenerators coneFromInequalities(const RMatrix& rows);

}  // namespace detail

}  // namespace polycalc
