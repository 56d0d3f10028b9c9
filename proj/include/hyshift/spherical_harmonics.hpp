#pragma once

#include <complex>

namespace hyshift {

/// Orthonormal Y_l^m(theta, phi) with the Condon-Shortley phase, from the
/// normalized associated-Legendre recurrence. Zero when |m| > l.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Real theta-part of Y_l^m (value at phi = 0); zero when |m| > l.
double spherical_harmonic_theta(int l, int m, double cos_theta, double sin_theta);

}  // namespace hyshift
