#include "polycalc/rational.hpp"

#include "polycalc/errors.hpp"

#include <sstream>

namespace polycalc {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num) / Rational(den);
}

Rational parseRational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    return ratio(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string toString(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

std::string toString(const RVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += toString(v(i));
  }
  return out;
}

int lexCompare(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  return 0;
}

bool isZero(const RVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

RVector primitive(const RVector& v, RowSign sign) {
  Integer denLcm = 1;
  for (Index i = 0; i < v.size(); ++i)
    denLcm = lcm(denLcm, Integer(denominator(v(i))));
  Integer numGcd = 0;
  for (Index i = 0; i < v.size(); ++i)
    numGcd = gcd(numGcd, Integer(numerator(v(i)) * (denLcm / denominator(v(i)))));
  if (numGcd == 0) return v;  // zero vector
  Rational scale = ratio(denLcm, numGcd);
  if (sign == RowSign::Canonical) {
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i) != 0) {
        if (v(i) < 0) scale = -scale;
        break;
      }
    }
  }
  return v * scale;
}

RVector zeroVector(Index dim) { return RVector::Zero(dim); }

RVector unitVector(Index dim, Index i) {
  RVector v = RVector::Zero(dim);
  v(i) = 1;
  return v;
}

RVector appended(const RVector& v, const Rational& tail) {
  RVector out(v.size() + 1);
  out.head(v.size()) = v;
  out(v.size()) = tail;
  return out;
}

RVector withoutLast(const RVector& v) { return v.head(v.size() - 1); }

}  // namespace polycalc
