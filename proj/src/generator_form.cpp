#include "polycalc/generator_form.hpp"

namespace polycalc {

GeneratorForm GeneratorForm::empty(Index dim) {
  GeneratorForm g;
  g.dim = dim;
  return g;
}

GeneratorForm GeneratorForm::singlePoint(const RVector& p) {
  GeneratorForm g;
  g.dim = p.size();
  g.points.push_back(p);
  return g;
}

bool GeneratorForm::operator==(const GeneratorForm& other) const {
  return dim == other.dim && points == other.points && rays == other.rays &&
         lineality == other.lineality;
}

}  // namespace polycalc
