#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyshift/angular.hpp"
#include "support/independent.hpp"

#include <array>
#include <cmath>

using namespace hyshift;
using angular::gaunt;
using angular::tabulated_3j_l2l;
using angular::wigner3j;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// Value of an ExactValue known to be rational.
Rational as_rational(const ExactValue& v) {
  REQUIRE(v.pi_exponent() == 0);
  const auto surd = v.surd_form();
  REQUIRE(surd.square_free == 1);
  return v.sign() * surd.coefficient;
}

}  // namespace

TEST_CASE("HalfInt arithmetic and character") {
  const HalfInt three_halves = h(3);
  CHECK(three_halves.to_string() == "3/2");
  CHECK(HalfInt::from_int(2).to_string() == "2");
  CHECK(h(-1).to_string() == "-1/2");
  CHECK((three_halves + kHalf) == HalfInt::from_int(2));
  CHECK((three_halves - kHalf).is_integer());
  CHECK(three_halves.same_character(-kHalf));
  CHECK_FALSE(three_halves.same_character(HalfInt::from_int(1)));
  CHECK((-three_halves).abs() == three_halves);
}

TEST_CASE("ExactValue normal form") {
  CHECK(ExactValue::zero().sign() == 0);
  CHECK(ExactValue::signed_sqrt(-1, Rational(0)).is_zero());
  CHECK(ExactValue::signed_sqrt(1, Rational(6, 4)).radicand() == Rational(3, 2));
  CHECK_THROWS_AS(ExactValue::signed_sqrt(1, Rational(-1)), std::domain_error);

  const auto v = ExactValue::signed_sqrt(-1, Rational(1, 30));
  CHECK(v * v == ExactValue::from_rational(Rational(1, 30)));
  CHECK(v.signed_square() == Rational(-1, 30));
  const auto surd = v.surd_form();
  CHECK(surd.coefficient == Rational(1, 30));
  CHECK(surd.square_free == 30);
  CHECK(v.to_double() == doctest::Approx(-std::sqrt(1.0 / 30)).epsilon(1e-15));

  // sqrt(72) = 6 sqrt(2); sqrt(2 * 101^2 * 103^2) needs the cofactor path.
  CHECK(ExactValue::signed_sqrt(1, Rational(72)).surd_form().coefficient == 6);
  const BigInt big = BigInt(2) * 101 * 101 * 103 * 103;
  const auto big_surd = ExactValue::signed_sqrt(1, Rational(big)).surd_form();
  CHECK(big_surd.coefficient == 101 * 103);
  CHECK(big_surd.square_free == 2);

  SUBCASE("square then signed square root is the identity") {
    for (int p = -12; p <= 12; ++p) {
      for (int q = 1; q <= 7; ++q) {
        const auto x = ExactValue::signed_sqrt(p < 0 ? -1 : 1, Rational(std::abs(p), q));
        const auto back = ExactValue::signed_sqrt(x.sign(), Rational(abs(x.signed_square())));
        CHECK(back == x);
      }
    }
  }
}

TEST_CASE("wigner3j examples") {
  CHECK(wigner3j(0, 0, 0, 0, 0, 0) == ExactValue::one());
  CHECK(wigner3j(1, 1, 1, 1, 0, 0).is_zero());

  const auto v = wigner3j(1, 2, 1, 0, 0, 0);
  CHECK(v == ExactValue::signed_sqrt(1, Rational(2, 15)));
  CHECK(v.to_double() == doctest::Approx(testing::gsl_3j(2, 4, 2, 0, 0, 0)).epsilon(1e-14));
  CHECK(v == tabulated_3j_l2l(1, 0));

  // (j-1/2 2 j-1/2; 0 0 0) = (-1)^(j+1/2) / (2 sqrt 2) sqrt((j+1/2)(j-1/2) / ((j+1) j (j-1)))
  // evaluated at j = 3/2
  const Rational j(3, 2);
  const Rational radicand = Rational(1, 8) * (j + Rational(1, 2)) * (j - Rational(1, 2)) /
                            ((j + 1) * j * (j - 1));
  CHECK(v == ExactValue::signed_sqrt(1, radicand));
}

TEST_CASE("wigner3j rejects bad projections") {
  CHECK_THROWS_AS(wigner3j(1, 1, 1, 2, -1, -1), std::invalid_argument);
  CHECK_THROWS_AS(wigner3j(h(1), h(1), h(2), h(2), h(-1), h(-1)), std::invalid_argument);
  CHECK_THROWS_AS(wigner3j(h(-2), h(2), h(2), h(0), h(0), h(0)), std::invalid_argument);
}

TEST_CASE("wigner3j matches GSL for all j <= 4") {
  int compared = 0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        if ((a + b + c) % 2 != 0) continue;
        for (int ma = -a; ma <= a; ma += 2)
          for (int mb = -b; mb <= b; mb += 2) {
            const int mc = -ma - mb;
            if (std::abs(mc) > c) continue;
            const double expected = testing::gsl_3j(a, b, c, ma, mb, mc);
            const double got = wigner3j(h(a), h(b), h(c), h(ma), h(mb), h(mc)).to_double();
            CHECK(got == doctest::Approx(expected).epsilon(1e-13).scale(1.0));
            ++compared;
          }
      }
  CHECK(compared > 1000);
}

TEST_CASE("tabulated (l 2 l; -m 0 m)") {
  CHECK(tabulated_3j_l2l(1, 0) == ExactValue::signed_sqrt(1, Rational(2, 15)));
  CHECK(tabulated_3j_l2l(1, 1) == ExactValue::signed_sqrt(1, Rational(1, 30)));
  CHECK_THROWS_AS(tabulated_3j_l2l(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(tabulated_3j_l2l(2, 3), std::invalid_argument);
  for (int l = 1; l <= 6; ++l)
    for (int m = -l; m <= l; ++m) CHECK(tabulated_3j_l2l(l, m) == wigner3j(l, 2, l, -m, 0, m));
}

TEST_CASE("specific symbols of the type-one reduction") {
  // (j-1/2 2 j-1/2; -(m+1/2) 0 m+1/2) =
  //   (-1)^(j-m-1) / (2 sqrt 2) [3(m+1/2)^2 - (j-1/2)(j+1/2)] / sqrt((j+1)(j+1/2) j (j-1/2)(j-1))
  for (int J = 3; J <= 11; J += 2) {
    const int l = (J - 1) / 2;
    const Rational j(J, 2);
    for (int ml = -l; ml <= l; ++ml) {
      const Rational mp(ml);  // m + 1/2
      const Rational numer = 3 * mp * mp - (j - Rational(1, 2)) * (j + Rational(1, 2));
      const Rational denom = (j + 1) * (j + Rational(1, 2)) * j * (j - Rational(1, 2)) * (j - 1);
      // j - m - 1 with m = ml - 1/2
      const int exponent = (J - (2 * ml - 1) - 2) / 2;
      const int sign = (exponent % 2 == 0 ? 1 : -1) * (numer > 0 ? 1 : (numer < 0 ? -1 : 0));
      const auto expected = ExactValue::signed_sqrt(sign, numer * numer / (8 * denom));
      CHECK(wigner3j(l, 2, l, -ml, 0, ml) == expected);
    }
  }
}

TEST_CASE("Y20 and Y00 contributions to the type-one diagonal element") {
  // sqrt(4pi/5)/(3j) [(j+m) G(m-1/2) + (j-m) G(m+1/2)] = -(1/6)(3m^2 - j(j+1))/((j+1)j)
  // sqrt(pi)/(3j)   [(j+m) <Y|Y00|Y> + (j-m) <Y|Y00|Y>] = 1/3
  const auto sqrt_4pi_over_5 = ExactValue::signed_sqrt(1, Rational(4, 5), 1);
  const auto sqrt_pi = ExactValue::signed_sqrt(1, Rational(1), 1);
  for (int J = 3; J <= 13; J += 2) {
    const int l = (J - 1) / 2;
    const Rational j(J, 2);
    for (int M = -J; M <= J; M += 2) {
      const Rational m(M, 2);
      Rational quad(0), mono(0);
      for (int side : {-1, 1}) {
        const int ml = (M + side) / 2;
        const Rational weight = side < 0 ? Rational(j + m) : Rational(j - m);
        if (std::abs(ml) > l) continue;
        quad += weight * as_rational(sqrt_4pi_over_5 * gaunt(l, ml, 2, 0, l, ml));
        mono += weight * as_rational(sqrt_pi * gaunt(l, ml, 0, 0, l, ml));
      }
      quad /= 3 * j;
      mono /= 3 * j;
      CHECK(quad == -Rational(1, 6) * (3 * m * m - j * (j + 1)) / ((j + 1) * j));
      CHECK(mono == Rational(1, 3));
    }
  }
}

TEST_CASE("gaunt examples") {
  CHECK(gaunt(0, 0, 0, 0, 0, 0) == ExactValue::signed_sqrt(1, Rational(1, 4), -1));
  CHECK(gaunt(0, 0, 1, 0, 0, 0).is_zero());
  const auto g = gaunt(1, 0, 2, 0, 1, 0);
  CHECK(g == ExactValue::signed_sqrt(1, Rational(1, 5), -1));

  const auto numeric = testing::sphere_integral([](double t, double p) {
    return std::conj(testing::reference_ylm(1, 0, t, p)) * testing::reference_ylm(2, 0, t, p) *
           testing::reference_ylm(1, 0, t, p);
  });
  CHECK(g.to_double() == doctest::Approx(numeric.real()).epsilon(1e-13));
  CHECK_THROWS_AS(gaunt(1, 2, 0, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("gaunt against sphere quadrature, l <= 3") {
  for (int lp = 0; lp <= 3; ++lp)
    for (int L = 0; L <= 3; ++L)
      for (int l = 0; l <= 3; ++l)
        for (int m = -l; m <= l; ++m)
          for (int M = -L; M <= L; ++M) {
            const int mp = M + m;
            if (std::abs(mp) > lp) continue;
            const auto exact = gaunt(lp, mp, L, M, l, m);
            if ((lp + L + l) % 2 != 0) CHECK(exact.is_zero());
            const auto numeric = testing::sphere_integral([&](double t, double p) {
              return std::conj(testing::reference_ylm(lp, mp, t, p)) *
                     testing::reference_ylm(L, M, t, p) * testing::reference_ylm(l, m, t, p);
            });
            CHECK(exact.to_double() == doctest::Approx(numeric.real()).epsilon(1e-12).scale(1.0));
          }
}

TEST_CASE("3j column symmetries and orthogonality, exact, j <= 4") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        if ((a + b + c) % 2 != 0) continue;
        if (!angular::triangle(h(a), h(b), h(c))) continue;
        const int odd_sign = ((a + b + c) / 2) % 2 == 0 ? 1 : -1;
        for (int ma = -a; ma <= a; ma += 2)
          for (int mb = -b; mb <= b; mb += 2) {
            const int mc = -ma - mb;
            if (std::abs(mc) > c) continue;
            const auto v = wigner3j(h(a), h(b), h(c), h(ma), h(mb), h(mc));
            CHECK(wigner3j(h(b), h(c), h(a), h(mb), h(mc), h(ma)) == v);
            const auto swapped = wigner3j(h(b), h(a), h(c), h(mb), h(ma), h(mc));
            CHECK(swapped == (odd_sign > 0 ? v : -v));
          }
        // sum over m1, m2 of (2 j3 + 1) 3j^2 = 1 for each m3
        for (int mc = -c; mc <= c; mc += 2) {
          Rational sum(0);
          for (int ma = -a; ma <= a; ma += 2) {
            const int mb = -ma - mc;
            if (std::abs(mb) > b) continue;
            sum += wigner3j(h(a), h(b), h(c), h(ma), h(mb), h(mc)).radicand();
          }
          CHECK(sum * (c + 1) == 1);
        }
      }
}
