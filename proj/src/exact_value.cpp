#include "hyshift/exact_value.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hyshift {

namespace {

// Splits n = k^2 * s with s square-free; returns {k, s}.
// Trial division up to the cube root of what remains; the cofactor then has
// at most two prime factors, so it is either square-free or a perfect square.
std::pair<BigInt, BigInt> split_square(BigInt n) {
  BigInt outside = 1;
  BigInt inside = 1;
  for (BigInt p = 2; p * p * p <= n; ++p) {
    int multiplicity = 0;
    while (n % p == 0) {
      n /= p;
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) outside *= p;
    if (multiplicity % 2 == 1) inside *= p;
  }
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root > 1 && root * root == n) return {outside * root, inside};
  return {outside, inside * n};
}

}  // namespace

ExactValue::ExactValue(int sign, Rational radicand, int pi_exponent)
    : sign_(sign), radicand_(std::move(radicand)), pi_exponent_(pi_exponent) {
  if (radicand_ == 0) {
    sign_ = 0;
    pi_exponent_ = 0;
  }
}

ExactValue ExactValue::signed_sqrt(int sign, const Rational& radicand, int pi_exponent) {
  if (radicand < 0) throw std::domain_error("ExactValue: negative radicand");
  if (sign == 0 || radicand == 0) return {};
  return ExactValue(sign > 0 ? 1 : -1, radicand, pi_exponent);
}

ExactValue ExactValue::from_rational(const Rational& q) {
  if (q == 0) return {};
  return ExactValue(q > 0 ? 1 : -1, q * q, 0);
}

ExactValue::Surd ExactValue::surd_form() const {
  if (is_zero()) return {Rational(0), BigInt(1)};
  // sqrt(p/q) = sqrt(p*q)/q
  const BigInt p = boost::multiprecision::numerator(radicand_);
  const BigInt q = boost::multiprecision::denominator(radicand_);
  auto [outside, inside] = split_square(p * q);
  return {Rational(outside, q), inside};
}

double ExactValue::to_double() const {
  if (is_zero()) return 0.0;
  const long double r = radicand_.convert_to<long double>();
  long double v = std::sqrt(r);
  if (pi_exponent_ != 0) {
    v *= std::pow(std::numbers::pi_v<long double>, 0.5L * pi_exponent_);
  }
  return static_cast<double>(sign_ * v);
}

ExactValue ExactValue::operator-() const {
  ExactValue out = *this;
  out.sign_ = -out.sign_;
  return out;
}

ExactValue ExactValue::operator*(const ExactValue& other) const {
  if (is_zero() || other.is_zero()) return {};
  return ExactValue(sign_ * other.sign_, radicand_ * other.radicand_,
                    pi_exponent_ + other.pi_exponent_);
}

std::string ExactValue::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << (sign_ > 0 ? "+" : "-") << "sqrt(" << radicand_;
  if (pi_exponent_ != 0) os << " * pi^" << pi_exponent_;
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.to_string(); }

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[static_cast<std::size_t>(n)];
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

}  // namespace hyshift
