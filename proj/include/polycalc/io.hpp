#pragma once

#include "polycalc/functions.hpp"
#include "polycalc/polyhedron.hpp"

#include <optional>
#include <string>

namespace polycalc {

/// One parsed input file. Line-oriented grammar, rationals as "p/q":
///
///   hrep dim=N          vrep dim=N         function dim=N
///   eq a1 .. aN = b     point p1 .. pN     domain hrep dim=N
///   ineq a1 .. aN <= b  ray r1 .. rN       eq/ineq rows of the domain
///                       lin l1 .. lN       piece v1 .. vN beta
///
///   vector dim=N        map rows=M cols=N
///   point v1 .. vN      row a1 .. aN       (M row lines)
///
/// Blank lines and '#' comments are accepted on input and never printed, so
/// printing a canonical document reproduces it byte for byte.
struct Document {
  enum class Kind { HRep, VRep, Function, Vector, Map };

  Kind kind;
  std::string name;
  std::optional<ConstraintForm> hrep;
  std::optional<GeneratorForm> vrep;
  std::optional<GPCFunction> function;
  std::optional<RVector> vector;
  std::optional<RMatrix> map;
};

/// Throws ParseError (line/column) on malformed input; function documents
/// construct a GPCFunction, so an empty function domain surfaces as EmptySet.
Document parseDocument(const std::string& text, const std::string& name = "");

std::string printDocument(const Document& doc);

std::string printHRep(const ConstraintForm& c);
std::string printVRep(const GeneratorForm& g);
std::string printFunction(const GPCFunction& f);
std::string printVector(const RVector& v);
std::string printMap(const RMatrix& m);

}  // namespace polycalc
