#include "hyshift/spherical_harmonics.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace hyshift {

double spherical_harmonic_theta(int l, int m, double cos_theta, double sin_theta) {
  if (l < 0) throw std::invalid_argument("spherical harmonic: negative l");
  const int am = std::abs(m);
  if (am > l) return 0.0;

  // Sectoral seed P_mm, then upward in l at fixed m.
  long double pmm = 1.0L / std::sqrt(4.0L * std::numbers::pi_v<long double>);
  for (int k = 1; k <= am; ++k) {
    pmm *= -std::sqrt((2.0L * k + 1) / (2.0L * k)) * sin_theta;
  }
  long double value = pmm;
  if (l > am) {
    long double prev = pmm;
    long double curr = cos_theta * std::sqrt(2.0L * am + 3) * pmm;
    for (int ll = am + 2; ll <= l; ++ll) {
      const long double a = std::sqrt((4.0L * ll * ll - 1) / (1.0L * ll * ll - 1.0L * am * am));
      const long double b = std::sqrt((1.0L * (ll - 1) * (ll - 1) - 1.0L * am * am) /
                                      (4.0L * (ll - 1) * (ll - 1) - 1));
      const long double next = a * (cos_theta * curr - b * prev);
      prev = curr;
      curr = next;
    }
    value = curr;
  }
  // Y_l^{-m} = (-1)^m conj(Y_l^m); the phi-part carries the conjugation.
  if (m < 0 && am % 2 == 1) value = -value;
  return static_cast<double>(value);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  const double theta_part = spherical_harmonic_theta(l, m, std::cos(theta), std::sin(theta));
  if (m == 0) return {theta_part, 0.0};
  return std::polar(1.0, m * phi) * theta_part;
}

}  // namespace hyshift
