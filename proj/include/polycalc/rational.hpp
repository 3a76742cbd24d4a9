#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace polycalc {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) under arithmetic, so equality is value equality.
using Rational = boost::multiprecision::mpq_rational;

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Eigen::Index;

/// num/den through exact division. The raw two-argument mpq constructor does
/// not canonicalize signs, so construction goes through this everywhere.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "p/q" (q omitted when 1), with optional leading sign.
Rational parseRational(const std::string& text);

std::string toString(const Rational& value);
std::string toString(const RVector& v);  // entries separated by single spaces

/// Lexicographic order; vectors of unequal size compare by size first.
int lexCompare(const RVector& a, const RVector& b);
bool isZero(const RVector& v);

/// How to fix the sign of a scaled row.
enum class RowSign {
  Keep,       // positive scaling only (inequality rows, rays)
  Canonical,  // also flip so the first nonzero entry is positive
};

/// Scales v so its entries are coprime integers. Zero stays zero.
RVector primitive(const RVector& v, RowSign sign);

RVector zeroVector(Index dim);
RVector unitVector(Index dim, Index i);

/// v with entry at the given index removed / appended (used when moving
/// between a space and its homogenization).
RVector appended(const RVector& v, const Rational& tail);
RVector withoutLast(const RVector& v);

}  // namespace polycalc
