#pragma once

#include "polycalc/polyhedron.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace polycalc {

/// Finite rational or +infinity; -infinity is unrepresentable by design
/// (properness is structural).
class ExtendedValue {
 public:
  static ExtendedValue infinity() { return ExtendedValue(std::nullopt); }
  static ExtendedValue finite(Rational v) { return ExtendedValue(std::move(v)); }

  bool isFinite() const { return bool(value_); }
  const Rational& value() const { return *value_; }

  bool operator==(const ExtendedValue& other) const { return value_ == other.value_; }

 private:
  explicit ExtendedValue(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& out, const ExtendedValue& v);

struct Piece {
  RVector slope;
  Rational offset;

  bool operator==(const Piece& other) const = default;
};

/// Generalized polyhedral convex function: the maximum of finitely many
/// affine pieces on a nonempty polyhedral domain, +infinity outside it.
class GPCFunction {
 public:
  /// Canonicalizes the domain (throws EmptySet when it is empty: the
  /// function would be improper) and sorts/dedups the pieces (must be
  /// nonempty).
  GPCFunction(ConstraintForm domain, std::vector<Piece> pieces);

  Index dim() const { return domain_.dim; }
  const ConstraintForm& domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// True when the domain has no equality rows, i.e. the function is
  /// polyhedral convex, not merely generalized polyhedral convex.
  bool isPolyhedral() const { return domain_.eqCount() == 0; }

 private:
  ConstraintForm domain_;
  std::vector<Piece> pieces_;
};

ExtendedValue evaluate(const GPCFunction& f, const RVector& x);

/// Indices of the pieces attaining the maximum at x (all ties kept).
/// Throws PointNotInDomain.
std::vector<Index> activePieces(const GPCFunction& f, const RVector& x);

/// {(x, t) : x in dom f, f(x) <= t} in dimension dim+1 (t last).
Polyhedron epigraph(const GPCFunction& f);

/// Reads a function back off its epigraph: rows with negative t-coefficient
/// become pieces, zero-t rows the domain; an equality row pinning t is split
/// and contributes its lower half. Throws NotAnEpigraph when the set is
/// empty, extends downward, or caps t from above.
GPCFunction fromEpigraph(const Polyhedron& p);

struct PWLCell {
  Polyhedron region;
  RVector slope;
  Rational offset;
};

/// Cover of dom f by cells on which f is affine (one per piece where it is
/// maximal; empty cells dropped).
std::vector<PWLCell> pwlDecompose(const GPCFunction& f);

/// Pointwise sum. Throws EmptyDomainIntersection when the domains miss each
/// other (the sum would be improper).
GPCFunction add(const GPCFunction& a, const GPCFunction& b);

/// h -> f'(x; h): active piece slopes over the tangent cone of the domain.
/// Throws PointNotInDomain.
GPCFunction directionalDerivative(const GPCFunction& f, const RVector& x);

/// Infimal convolution via the epigraph sum; NotAnEpigraph propagates when
/// the result is improper.
GPCFunction infConvolution(const GPCFunction& a, const GPCFunction& b);

/// Legendre-Fenchel conjugate on the dual space, assembled cell by cell
/// from the piecewise-linear decomposition.
GPCFunction conjugate(const GPCFunction& f);

/// conv of active piece slopes + cone of active domain normals + row space
/// of the domain equality block. Throws PointNotInDomain.
Polyhedron subdifferential(const GPCFunction& f, const RVector& x);

/// sup{<xstar, x> - t : (x, t) in epi f} by exact LP; the conjugate value
/// without going through the conjugate construction.
ExtendedValue conjugateValueViaLP(const GPCFunction& f, const RVector& xstar);

/// f(x) + f*(x*) == <x*, x>, with f* evaluated via the LP route.
/// Throws PointNotInDomain when f(x) is not finite.
bool fenchelYoungCheck(const GPCFunction& f, const RVector& x, const RVector& xstar);

/// 0 on P, +infinity outside. Throws EmptySet.
GPCFunction indicator(const Polyhedron& p);

/// Drops pieces that never strictly exceed the maximum of the others on the
/// domain (one exact LP per piece).
std::vector<Piece> prunePieces(const ConstraintForm& domain, std::vector<Piece> pieces);

}  // namespace polycalc
