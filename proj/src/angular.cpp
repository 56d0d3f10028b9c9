#include "hyshift/angular.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hyshift::angular {

namespace {

void check_pair(HalfInt j, HalfInt m, const char* which) {
  if (j.twice() < 0) {
    throw std::invalid_argument(std::string("wigner3j: negative ") + which);
  }
  if (!j.same_character(m)) {
    throw std::invalid_argument(std::string("wigner3j: ") + which +
                                " and its projection differ in half-integer character");
  }
  if (m.abs() > j) {
    throw std::invalid_argument(std::string("wigner3j: |m| exceeds ") + which);
  }
}

// Integer value of a HalfInt expression known to be integral.
int whole(HalfInt h) { return h.as_int(); }

}  // namespace

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  if (!(a + b + c).is_integer()) return false;
  return (a - b).abs() <= c && c <= a + b;
}

ExactValue wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  check_pair(j1, m1, "j1");
  check_pair(j2, m2, "j2");
  check_pair(j3, m3, "j3");

  if ((m1 + m2 + m3).twice() != 0) return ExactValue::zero();
  if (!triangle(j1, j2, j3)) return ExactValue::zero();

  // Triangle coefficient and the projection factorials under one square root.
  Rational radicand(factorial(whole(j1 + j2 - j3)) * factorial(whole(j1 - j2 + j3)) *
                        factorial(whole(j2 + j3 - j1)),
                    factorial(whole(j1 + j2 + j3) + 1));
  radicand *= factorial(whole(j1 + m1)) * factorial(whole(j1 - m1)) *
              factorial(whole(j2 + m2)) * factorial(whole(j2 - m2)) *
              factorial(whole(j3 + m3)) * factorial(whole(j3 - m3));

  const int k_min = std::max({0, whole(j2 - j3 - m1), whole(j1 - j3 + m2)});
  const int k_max = std::min({whole(j1 + j2 - j3), whole(j1 - m1), whole(j2 + m2)});

  Rational sum(0);
  for (int k = k_min; k <= k_max; ++k) {
    const BigInt denom = factorial(k) * factorial(whole(j3 - j2 + m1) + k) *
                         factorial(whole(j3 - j1 - m2) + k) *
                         factorial(whole(j1 + j2 - j3) - k) * factorial(whole(j1 - m1) - k) *
                         factorial(whole(j2 + m2) - k);
    sum += Rational(parity_sign(k), denom);
  }
  if (sum == 0) return ExactValue::zero();

  const int phase = parity_sign(std::abs(whole(j1 - j2 - m3)));
  const int sign = phase * (sum > 0 ? 1 : -1);
  return ExactValue::signed_sqrt(sign, sum * sum * radicand);
}

ExactValue wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
  return wigner3j(HalfInt::from_int(l1), HalfInt::from_int(l2), HalfInt::from_int(l3),
                  HalfInt::from_int(m1), HalfInt::from_int(m2), HalfInt::from_int(m3));
}

ExactValue tabulated_3j_l2l(int l, int m) {
  if (l < 1) throw std::invalid_argument("tabulated_3j_l2l: requires l >= 1");
  if (std::abs(m) > l) throw std::invalid_argument("tabulated_3j_l2l: |m| > l");

  const BigInt numer = 3 * m * m - l * (l + 1);
  if (numer == 0) return ExactValue::zero();
  const BigInt denom = BigInt(2 * l + 3) * (2 * l + 2) * (2 * l + 1) * (2 * l) * (2 * l - 1);
  const int sign = parity_sign(std::abs(l - m)) * (numer > 0 ? 1 : -1);
  return ExactValue::signed_sqrt(sign, Rational(4 * numer * numer, denom));
}

ExactValue gaunt(int lp, int mp, int L, int M, int l, int m) {
  if (lp < 0 || L < 0 || l < 0) throw std::invalid_argument("gaunt: negative degree");
  if (std::abs(mp) > lp || std::abs(M) > L || std::abs(m) > l) {
    throw std::invalid_argument("gaunt: |m| exceeds its degree");
  }
  if (mp != M + m) return ExactValue::zero();
  if ((lp + L + l) % 2 != 0) return ExactValue::zero();

  const ExactValue projected = wigner3j(lp, L, l, -mp, M, m);
  const ExactValue aligned = wigner3j(lp, L, l, 0, 0, 0);
  const ExactValue prefactor = ExactValue::signed_sqrt(
      parity_sign(std::abs(mp)), Rational(BigInt(2 * lp + 1) * (2 * L + 1) * (2 * l + 1), 4), -1);
  return prefactor * projected * aligned;
}

}  // namespace hyshift::angular
