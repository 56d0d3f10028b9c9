#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>

namespace hyshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact number of the form  sign * sqrt(radicand * pi^pi_exponent),
/// radicand a non-negative rational in lowest terms.
///
/// Closed under multiplication, which is all the 3j/Gaunt algebra needs.
/// Sums are formed by the caller in Rational arithmetic before wrapping.
class ExactValue {
public:
  /// Zero.
  ExactValue() = default;

  static ExactValue zero() { return {}; }
  static ExactValue one() { return ExactValue(1, Rational(1), 0); }

  /// sign * sqrt(radicand * pi^pi_exponent). Throws on a negative radicand.
  static ExactValue signed_sqrt(int sign, const Rational& radicand, int pi_exponent = 0);

  /// The rational q itself, i.e. sign(q) * sqrt(q^2).
  static ExactValue from_rational(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  int pi_exponent() const { return pi_exponent_; }
  bool is_zero() const { return sign_ == 0; }

  /// value^2 divided by pi^pi_exponent (the signed square sign*radicand).
  Rational signed_square() const { return sign_ * radicand_; }

  /// Decomposition |value| = coefficient * sqrt(square_free) * pi^(pi_exponent/2)
  /// with square_free a square-free positive integer (1 for zero).
  struct Surd {
    Rational coefficient;
    BigInt square_free;
  };
  Surd surd_form() const;

  double to_double() const;

  ExactValue operator-() const;
  ExactValue operator*(const ExactValue& other) const;
  ExactValue& operator*=(const ExactValue& other) { return *this = *this * other; }

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

  /// e.g. "+sqrt(2/15)", "-sqrt(1/5 * pi^-1)", "0".
  std::string to_string() const;

private:
  ExactValue(int sign, Rational radicand, int pi_exponent);

  int sign_ = 0;
  Rational radicand_{0};
  int pi_exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactValue& v);

/// n! with a shared cache.
BigInt factorial(int n);

/// Largest k with k*k <= n.
BigInt isqrt(const BigInt& n);

}  // namespace hyshift
