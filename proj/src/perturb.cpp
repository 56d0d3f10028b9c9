#include "hyshift/perturb.hpp"

#include "hyshift/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyshift::perturb {

namespace {

void check_level(int n, HalfInt j, int Z) {
  if (n < 1) throw std::invalid_argument("level: n must be >= 1");
  if (Z < 1) throw std::invalid_argument("level: Z must be >= 1");
  if (!j.is_half_odd() || j < kHalf) throw std::invalid_argument("level: j must be half-odd >= 1/2");
  if (j.twice() > 2 * n - 1) throw std::invalid_argument("level: j exceeds n - 1/2");
}

void check_projection(HalfInt j, HalfInt m) {
  if (!m.is_half_odd() || m.abs() > j) throw std::invalid_argument("level: need |m| <= j, m half-odd");
}

// m^2 / (j(j+1)) = M^2 / (J(J+2)) in doubled units.
Rational projection_ratio(HalfInt j, HalfInt m) {
  const int J = j.twice();
  const int M = m.twice();
  return Rational(M * M, J * (J + 2));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

double fine_structure_energy(int n, HalfInt j, int Z, double alpha_squared) {
  check_level(n, j, Z);
  const double z2 = static_cast<double>(Z) * Z;
  const double correction = 1.0 / (j.to_double() + 0.5) - 3.0 / (4.0 * n);
  return -(z2 / (n * n)) * (1.0 + z2 * alpha_squared / n * correction);
}

Rational fine_structure_energy_exact(int n, HalfInt j, int Z, const Rational& alpha_squared) {
  check_level(n, j, Z);
  const Rational z2(Z * Z);
  const Rational correction = Rational(2, j.twice() + 1) - Rational(3, 4 * n);
  return -(z2 / (n * n)) * (1 + z2 * alpha_squared / n * correction);
}

ExactValue linear_shift_coefficient(int n, HalfInt j, HalfInt m, int Z) {
  check_level(n, j, Z);
  check_projection(j, m);
  const int J = j.twice();
  const int M = m.twice();
  // (j+1/2)^2 = (J+1)^2/4, j(j+1) = J(J+2)/4, m = M/2
  const Rational gap = Rational(n * n) - Rational((J + 1) * (J + 1), 4);
  const Rational denom = Rational(J * (J + 2), 4);
  const Rational prefactor(3 * n, 4 * Z);
  const Rational square = prefactor * prefactor * Rational(M * M, 4) * gap / (denom * denom);
  return ExactValue::signed_sqrt(M > 0 ? 1 : -1, square);
}

ShiftPair linear_shift(int n, HalfInt j, HalfInt m, double lambda_linear, int Z) {
  const double magnitude = std::fabs(linear_shift_coefficient(n, j, m, Z).to_double() * lambda_linear);
  ShiftPair out;
  out.plus = {magnitude, Branch::Plus, std::nullopt};
  out.minus = {-magnitude, Branch::Minus, std::nullopt};
  return out;
}

Rational quadratic_shift_coefficient(const QuantumNumbers& qn) {
  validate(qn);
  const Rational scale(qn.n * qn.n, 4 * qn.Z * qn.Z);
  const Rational bracket(5 * qn.n * qn.n + 1 - 3 * qn.l * (qn.l + 1));
  return scale * bracket * (1 - projection_ratio(qn.j, qn.m));
}

EnergyShift quadratic_shift(const QuantumNumbers& qn, double lambda) {
  return {lambda * to_double(quadratic_shift_coefficient(qn)), std::nullopt, qn.l};
}

std::pair<double, double> hermitian2x2_eigenvalues(double h11, double h22, double h12_abs2) {
  if (!(h12_abs2 >= 0)) throw std::invalid_argument("hermitian2x2: |h12|^2 must be >= 0");
  const double mean = 0.5 * (h11 + h22);
  const double radius = std::hypot(0.5 * (h11 - h22), std::sqrt(h12_abs2));
  return {mean + radius, mean - radius};
}

std::vector<EnergyShift> displaced_quadratic_shift(int n, HalfInt j, HalfInt m, double lambda,
                                                   double z0, int Z) {
  if (!std::isfinite(lambda) || !std::isfinite(z0)) {
    throw std::invalid_argument("displaced_quadratic_shift: lambda and z0 must be finite");
  }
  check_level(n, j, Z);
  check_projection(j, m);
  const double offset = lambda * z0 * z0;
  const int lower_l = (j.twice() - 1) / 2;

  if (j.twice() == 2 * n - 1) {
    const double diag = quadratic_shift({n, lower_l, j, m, Z}, lambda).value;
    return {{offset + diag, Branch::Plus, lower_l}};
  }

  const double jj = j.to_double();
  const double mm = m.to_double();
  const double jp = jj + 0.5;
  const double scale = lambda * std::pow(n / (2.0 * Z), 2) * (1.0 - mm * mm / (jj * (jj + 1.0)));
  const double centre = 5.0 * n * n - 3.0 * jj * (jj + 1.0) + 0.25;
  const double mixing = 2.0 * Z * z0 * mm / (jj * (jj + 1.0) - mm * mm);
  const double radius = 3.0 * jp * std::sqrt(1.0 + mixing * mixing * (1.0 / (jp * jp) - 1.0 / (n * n)));

  // The "+" sign of the radius continues to l = j - 1/2 at z0 = 0.
  EnergyShift toward_lower{offset + scale * (centre + radius), std::nullopt, lower_l};
  EnergyShift toward_upper{offset + scale * (centre - radius), std::nullopt, lower_l + 1};
  if (toward_lower.value < toward_upper.value) std::swap(toward_lower, toward_upper);
  toward_lower.branch = Branch::Plus;
  toward_upper.branch = Branch::Minus;
  return {toward_lower, toward_upper};
}

EnergyShift vdw_shift(const QuantumNumbers& qn, double gamma, double beta) {
  const double r2 = to_double(radial::r2_expectation(qn.n, qn.l, qn.Z));
  const double quad = quadratic_shift(qn, gamma * (beta * beta - 1.0)).value;
  return {gamma * r2 + quad, std::nullopt, qn.l};
}

Rational vdw_shift_exact(const QuantumNumbers& qn, const Rational& gamma, const Rational& beta_squared) {
  return gamma * radial::r2_expectation(qn.n, qn.l, qn.Z) +
         gamma * (beta_squared - 1) * quadratic_shift_coefficient(qn);
}

double lennard_jones_gamma(double d) {
  if (!(d > 0)) throw std::invalid_argument("lennard_jones: d must be > 0");
  return -0.25 / (d * d * d);
}

Rational lennard_jones_gamma_exact(const Rational& d) {
  if (d <= 0) throw std::invalid_argument("lennard_jones: d must be > 0");
  return Rational(-1, 4) / (d * d * d);
}

Rational lennard_jones_shift_exact(const QuantumNumbers& qn, const Rational& d) {
  validate(qn);
  if (qn.Z != 1) throw std::invalid_argument("lennard_jones: defined for hydrogen (Z = 1)");
  if (d <= 0) throw std::invalid_argument("lennard_jones: d must be > 0");
  const Rational cube = 1 / (8 * d * d * d);
  const Rational radial_part = Rational(qn.n * qn.n, 2) * (5 * qn.n * qn.n + 1 - 3 * qn.l * (qn.l + 1));
  return -cube * radial_part * (3 - projection_ratio(qn.j, qn.m));
}

EnergyShift lennard_jones_shift(const QuantumNumbers& qn, double d) {
  validate(qn);
  if (qn.Z != 1) throw std::invalid_argument("lennard_jones: defined for hydrogen (Z = 1)");
  if (!(d > 0) || !std::isfinite(d)) throw std::invalid_argument("lennard_jones: d must be > 0");
  const double cube = std::pow(0.5 / d, 3);
  const double radial_part = 0.5 * qn.n * qn.n * (5.0 * qn.n * qn.n + 1.0 - 3.0 * qn.l * (qn.l + 1));
  const double angular = 3.0 - to_double(projection_ratio(qn.j, qn.m));
  return {-cube * radial_part * angular, std::nullopt, qn.l};
}

}  // namespace hyshift::perturb
