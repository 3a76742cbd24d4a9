#pragma once

#include "polycalc/constraint_form.hpp"
#include "polycalc/generator_form.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace polycalc {

/// A generalized polyhedral convex set carrying one or both canonical
/// representations. Immutable; the missing representation is converted on
/// first use and memoized (once-only, safe under concurrent reads).
class Polyhedron {
 public:
  static Polyhedron fromConstraints(ConstraintForm c);
  static Polyhedron fromGenerators(GeneratorForm g);

  Index dim() const { return dim_; }
  bool isEmpty() const { return empty_; }

  const ConstraintForm& constraints() const;
  const GeneratorForm& generators() const;

  bool contains(const RVector& x) const;

 private:
  Polyhedron() = default;

  struct Rep {
    std::optional<ConstraintForm> constraint;
    std::optional<GeneratorForm> generator;
    std::once_flag constraintOnce;
    std::once_flag generatorOnce;
  };

  std::shared_ptr<Rep> rep_;
  Index dim_ = 0;
  bool empty_ = true;
};

/// Every generator of p satisfies q's constraints (points as members, rays as
/// recession directions, lineality as lines).
bool subset(const Polyhedron& p, const Polyhedron& q);

bool setEqual(const Polyhedron& p, const Polyhedron& q);

/// Dimension of the affine hull; -1 for the empty set.
Index affineDimension(const Polyhedron& p);

}  // namespace polycalc
