#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyshift/oracle.hpp"
#include "hyshift/perturb.hpp"
#include "hyshift/regime.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>

using namespace hyshift;
using namespace hyshift::perturb;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

QuantumNumbers qn(int n, int l, int two_j, int two_m, int Z = 1) {
  return {n, l, h(two_j), h(two_m), Z};
}

std::pair<double, double> eigen_2x2(double a, double b, std::complex<double> c) {
  Eigen::Matrix2cd m;
  m << a, c, std::conj(c), b;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
  return {solver.eigenvalues()[1], solver.eigenvalues()[0]};
}

}  // namespace

TEST_CASE("fine structure energy") {
  CHECK(fine_structure_energy(1, kHalf, 1) ==
        doctest::Approx(-(1 + kAlphaSquared / 4)).epsilon(1e-15));
  CHECK(fine_structure_energy_exact(1, kHalf, 1, Rational(1, 100)) == -Rational(401, 400));
  CHECK(fine_structure_energy(3, h(3), 2, 0.0) == doctest::Approx(-4.0 / 9));
  CHECK_THROWS_AS(fine_structure_energy(2, h(5), 1), std::invalid_argument);

  // Levels are labelled by (n, j) alone, each holding 2(2j+1) states off the top.
  for (int n = 1; n <= 5; ++n) {
    std::map<int, int> count;
    for (const auto& q : enumerate_states(n, n, 1)) ++count[q.j.twice()];
    for (const auto& [two_j, c] : count)
      CHECK(c == (two_j == 2 * n - 1 ? two_j + 1 : 2 * (two_j + 1)));
  }
}

TEST_CASE("linear field shift") {
  CHECK(linear_shift_coefficient(2, kHalf, kHalf, 1) == ExactValue::signed_sqrt(1, Rational(3)));
  CHECK(linear_shift_coefficient(2, kHalf, -kHalf, 1) == ExactValue::signed_sqrt(-1, Rational(3)));
  CHECK(linear_shift_coefficient(1, kHalf, kHalf, 1).is_zero());
  // (9/12)(3/2) sqrt(5) / (15/4) = (3/10) sqrt(5)
  CHECK(linear_shift_coefficient(3, h(3), h(3), 3) == ExactValue::signed_sqrt(1, Rational(9, 20)));
  const auto pair = linear_shift(2, kHalf, -kHalf, 2.5, 1);
  CHECK(pair.plus.value == doctest::Approx(2.5 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(pair.minus.value == doctest::Approx(-2.5 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(pair.plus.branch == Branch::Plus);
  const auto top = linear_shift(2, h(3), kHalf, 1.0, 1);
  CHECK(top.plus.value == 0.0);
  CHECK(top.minus.value == 0.0);

  const auto oracle_result = oracle::degenerate_subspace_shifts(2, kHalf, kHalf, 1, oracle::Linear{1.0});
  CHECK(oracle_result.eigenvalues[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(oracle_result.eigenvalues[1] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("linear shift agrees with the oracle for n <= 4") {
  for (int Z = 1; Z <= 2; ++Z)
    for (int n = 2; n <= 4; ++n)
      for (int two_j = 1; two_j <= 2 * n - 3; two_j += 2)
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
          const auto cf = linear_shift(n, h(two_j), h(two_m), 0.7, Z);
          const auto o = oracle::degenerate_subspace_shifts(n, h(two_j), h(two_m), Z, oracle::Linear{0.7});
          CHECK(cf.plus.value == doctest::Approx(o.eigenvalues[0]).epsilon(1e-9));
          CHECK(cf.minus.value == doctest::Approx(o.eigenvalues[1]).epsilon(1e-9));
        }
}

TEST_CASE("quadratic shift") {
  CHECK(quadratic_shift_coefficient(qn(1, 0, 1, 1)) == 1);
  CHECK(quadratic_shift_coefficient(qn(2, 1, 3, 3)) == 6);
  CHECK(quadratic_shift_coefficient(qn(2, 0, 1, -1)) == 14);
  CHECK(quadratic_shift_coefficient(qn(2, 1, 1, 1)) == 10);
  CHECK(quadratic_shift(qn(2, 1, 3, 3), 0.0).value == 0.0);
  CHECK(quadratic_shift(qn(3, 2, 5, 1, 2), 0.25).value ==
        doctest::Approx(0.25 * static_cast<double>(quadratic_shift_coefficient(qn(3, 2, 5, 1, 2)))));
  CHECK_THROWS_AS(quadratic_shift_coefficient(qn(2, 1, 5, 1)), std::invalid_argument);

  const auto s1 = coupled_state(qn(1, 0, 1, 1));
  CHECK(oracle::matrix_element(s1, s1, oracle::Quadratic{1.0}).value.real() ==
        doctest::Approx(1.0).epsilon(1e-10));
  const auto p = coupled_state(qn(2, 1, 3, 3));
  CHECK(oracle::matrix_element(p, p, oracle::Quadratic{1.0}).value.real() ==
        doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("quadratic shift equals half of <r^2> times the angular factor") {
  for (const auto& q : enumerate_states(1, 5, 2)) {
    const Rational j(q.j.twice(), 2), m(q.m.twice(), 2);
    CHECK(quadratic_shift_coefficient(q) ==
          radial::r2_expectation(q.n, q.l, q.Z) / 2 * (1 - m * m / (j * (j + 1))));
  }
}

TEST_CASE("mean over m of the quadratic shift is <r^2>/3, exact") {
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l)
      for (int two_j : {2 * l - 1, 2 * l + 1}) {
        if (two_j < 1) continue;
        Rational sum(0);
        for (int two_m = -two_j; two_m <= two_j; two_m += 2)
          sum += quadratic_shift_coefficient(qn(n, l, two_j, two_m));
        CHECK(sum / (two_j + 1) == radial::r2_expectation(n, l, 1) / 3);
      }
}

TEST_CASE("2x2 hermitian eigenvalues") {
  auto [a, b] = hermitian2x2_eigenvalues(14, 10, 12);
  CHECK(a == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(b == doctest::Approx(8.0).epsilon(1e-15));
  std::tie(a, b) = hermitian2x2_eigenvalues(1, 1, 0);
  CHECK(a == 1.0);
  CHECK(b == 1.0);
  std::tie(a, b) = hermitian2x2_eigenvalues(-3, 5, 0);
  CHECK(a == 5.0);
  CHECK(b == -3.0);

  for (double h11 : {-7.0, 0.0, 0.3, 1e3})
    for (double h22 : {-2.0, 0.3, 11.0})
      for (std::complex<double> h12 : {std::complex<double>{0, 0}, {1e-8, 0}, {2, -3}, {0, 40}}) {
        const auto [up, down] = hermitian2x2_eigenvalues(h11, h22, std::norm(h12));
        const auto [eu, ed] = eigen_2x2(h11, h22, h12);
        CHECK(up == doctest::Approx(eu).epsilon(1e-13).scale(1.0));
        CHECK(down == doctest::Approx(ed).epsilon(1e-13).scale(1.0));
        CHECK(up >= down);
        CHECK(up + down == doctest::Approx(h11 + h22).epsilon(1e-13).scale(1.0));
      }
}

TEST_CASE("displaced quadratic shift") {
  const auto worked = displaced_quadratic_shift(2, kHalf, kHalf, 1.0, 1.0, 1);
  REQUIRE(worked.size() == 2);
  CHECK(worked[0].value == doctest::Approx(17.0).epsilon(1e-14));
  CHECK(worked[1].value == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(worked[0].branch == Branch::Plus);
  CHECK(worked[1].branch == Branch::Minus);

  const auto zero = displaced_quadratic_shift(2, kHalf, kHalf, 0.0, 1.0, 1);
  CHECK(zero[0].value == 0.0);
  CHECK(zero[1].value == 0.0);

  const auto top = displaced_quadratic_shift(3, h(5), h(3), 2.0, 0.5, 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].value == doctest::Approx(2.0 * 0.25 + quadratic_shift(qn(3, 2, 5, 3), 2.0).value));

  const auto negative = displaced_quadratic_shift(3, h(3), h(1), -1.0, 0.0, 1);
  REQUIRE(negative.size() == 2);
  CHECK(negative[0].value >= negative[1].value);
  CHECK(negative[0].connected_l == 2);

  CHECK_THROWS_AS(displaced_quadratic_shift(2, kHalf, kHalf, 1.0, std::nan(""), 1), std::invalid_argument);
  CHECK_THROWS_AS(displaced_quadratic_shift(2, kHalf, kHalf, INFINITY, 0.0, 1), std::invalid_argument);
}

TEST_CASE("displaced quadratic at z0 = 0 reduces to the quadratic pair") {
  for (int Z = 1; Z <= 2; ++Z)
    for (int n = 2; n <= 5; ++n)
      for (int two_j = 1; two_j <= 2 * n - 3; two_j += 2)
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
          const int l_low = (two_j - 1) / 2;
          const auto dq = displaced_quadratic_shift(n, h(two_j), h(two_m), 1.3, 0.0, Z);
          REQUIRE(dq.size() == 2);
          const double low = quadratic_shift(qn(n, l_low, two_j, two_m, Z), 1.3).value;
          const double high = quadratic_shift(qn(n, l_low + 1, two_j, two_m, Z), 1.3).value;
          CHECK(dq[0].value == doctest::Approx(std::max(low, high)).epsilon(1e-14));
          CHECK(dq[1].value == doctest::Approx(std::min(low, high)).epsilon(1e-14));
          CHECK(dq[0].connected_l == (low >= high ? l_low : l_low + 1));
        }
}

TEST_CASE("displaced quadratic against the oracle") {
  for (double z0 : {0.5, 2.0})
    for (int n = 2; n <= 3; ++n)
      for (int two_j = 1; two_j <= 2 * n - 3; two_j += 2)
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
          const auto cf = displaced_quadratic_shift(n, h(two_j), h(two_m), 0.8, z0, 1);
          const auto o = oracle::degenerate_subspace_shifts(n, h(two_j), h(two_m), 1,
                                                            oracle::DisplacedQuadratic{0.8, z0});
          CHECK(cf[0].value == doctest::Approx(o.eigenvalues[0]).epsilon(1e-9));
          CHECK(cf[1].value == doctest::Approx(o.eigenvalues[1]).epsilon(1e-9));
        }
}

TEST_CASE("generalized van der Waals shift") {
  for (const auto& q : enumerate_states(1, 4, 1)) {
    const Rational r2 = radial::r2_expectation(q.n, q.l, q.Z);
    CHECK(vdw_shift_exact(q, Rational(3, 7), Rational(1)) == Rational(3, 7) * r2);
    CHECK(vdw_shift_exact(q, Rational(0), Rational(5)) == 0);
    // (gamma/2) <r^2> [1 + beta^2 + (1 - beta^2) m^2/(j(j+1))]
    const Rational j(q.j.twice(), 2), m(q.m.twice(), 2), g(-2, 3), b2(9, 4);
    CHECK(vdw_shift_exact(q, g, b2) == g / 2 * r2 * (1 + b2 + (1 - b2) * m * m / (j * (j + 1))));
    CHECK(vdw_shift(q, -2.0 / 3, 1.5).value ==
          doctest::Approx(static_cast<double>(vdw_shift_exact(q, g, b2))).epsilon(1e-14));
  }
  const auto s = coupled_state(qn(2, 1, 3, 1));
  CHECK(oracle::matrix_element(s, s, oracle::GeneralizedVdW{0.5, 0.3}).value.real() ==
        doctest::Approx(vdw_shift(s.qn, 0.5, 0.3).value).epsilon(1e-10));
}

TEST_CASE("Lennard-Jones wall shift") {
  for (const auto& d : {Rational(10), Rational(7, 3), Rational(1000)}) {
    CHECK(lennard_jones_shift_exact(qn(1, 0, 1, 1), d) == -1 / (d * d * d));
    CHECK(lennard_jones_shift_exact(qn(2, 1, 3, 1), d) == -88 / (8 * d * d * d));
    CHECK(lennard_jones_shift_exact(qn(2, 1, 3, 3), d) == -72 / (8 * d * d * d));
  }
  CHECK(lennard_jones_shift(qn(1, 0, 1, -1), 10.0).value == doctest::Approx(-1e-3).epsilon(1e-12));
  CHECK_THROWS_AS(lennard_jones_shift(qn(1, 0, 1, 1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lennard_jones_shift(qn(1, 0, 1, 1), -2.0), std::invalid_argument);
  CHECK_THROWS_AS(lennard_jones_shift(qn(1, 0, 1, 1, 2), 5.0), std::invalid_argument);

  for (const auto& q : enumerate_states(1, 4, 1)) {
    const Rational d(13, 2);
    CHECK(lennard_jones_shift_exact(q, d) == vdw_shift_exact(q, lennard_jones_gamma_exact(d), 2));
    CHECK(lennard_jones_shift(q, 6.5).value < 0);
    const QuantumNumbers mirrored{q.n, q.l, q.j, -q.m, q.Z};
    CHECK(lennard_jones_shift_exact(q, d) == lennard_jones_shift_exact(mirrored, d));
    CHECK(lennard_jones_shift(q, 6.5).value ==
          doctest::Approx(vdw_shift(q, lennard_jones_gamma(6.5), std::sqrt(2.0)).value).epsilon(1e-14));
  }

  const auto s = coupled_state(qn(2, 1, 3, 1));
  const double d = 4.0;
  CHECK(oracle::matrix_element(s, s, oracle::LennardJones{d}).value.real() ==
        doctest::Approx(-88 * std::pow(0.5 / d, 3)).epsilon(1e-10));
}

TEST_CASE("regime report at normal conditions") {
  const auto r = regime_check(kNormalPressure, kNormalTemperature, 1);
  CHECK(r.density_ratio == doctest::Approx(1.0));
  CHECK(r.volume_per_atom_nm3 == doctest::Approx(40.0).epsilon(0.05));
  CHECK(r.wall_scale == doctest::Approx(4.6e-7).epsilon(0.05));
  CHECK(r.fine_structure_scale == doctest::Approx(5.3e-5).epsilon(0.05));
  CHECK(r.hyperfine_scale == doctest::Approx(2.9e-8).epsilon(0.05));
  CHECK(r.lamb_s_scale == doctest::Approx(1e-6));
  CHECK(r.fine_structure_dominates);
  CHECK(r.hyperfine_negligible);
  CHECK(r.coupled_basis_applies);
  CHECK(r.breakdown_n >= 1);

  // Fine structure loses to the wall shift at large n.
  const auto high = regime_check(kNormalPressure, kNormalTemperature, r.breakdown_n + 1);
  CHECK_FALSE(high.fine_structure_dominates);
  CHECK(high.breakdown_n == r.breakdown_n);

  // Ten times the pressure: d^3 drops tenfold.
  const auto dense = regime_check(10 * kNormalPressure, kNormalTemperature, 1);
  CHECK(dense.volume_per_atom_nm3 == doctest::Approx(r.volume_per_atom_nm3 / 10));
  CHECK(dense.wall_scale == doctest::Approx(r.wall_scale * 10));

  CHECK_THROWS_AS(regime_check(0.0, 300.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(regime_check(1e5, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(regime_check(1e5, 300.0, 0), std::invalid_argument);
}
