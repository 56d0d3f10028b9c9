#pragma once

#include "hyshift/exact_value.hpp"
#include "hyshift/quadrature.hpp"

#include <cstddef>

namespace hyshift::radial {

/// Bound hydrogenic radial state. Lengths in Bohr radii throughout.
struct RadialState {
  int n = 1;
  int l = 0;
  int Z = 1;
};

/// Throws std::invalid_argument unless n >= 1, 0 <= l < n and Z >= 1.
void validate(const RadialState& state);

/// Generalized Laguerre polynomial L_degree^(alpha)(x) by three-term recurrence.
double laguerre(int degree, int alpha, double x);

/// Normalized R_{n,l}(r) in a0^{-3/2}.
double radial_wavefunction(const RadialState& state, double r);

/// R_{n,l}(r) * exp(Z r / n): the polynomial factor left once the
/// exponential envelope is absorbed into a Gauss-Laguerre weight.
double radial_polynomial_part(const RadialState& state, double r);

/// <r^2>_{n,l} = (n^2 / 2Z^2) [5n^2 + 1 - 3l(l+1)], in a0^2, exact.
Rational r2_expectation(int n, int l, int Z);

struct QuadratureOptions {
  std::size_t initial_nodes = 64;
  std::size_t max_nodes = 512;
  double tolerance = 1e-12;
};

/// Integral of R_a R_b r^{2+k} dr over (0, inf), Gauss-Laguerre in the
/// variable x = (Z_a/n_a + Z_b/n_b) r. Node count doubles from
/// initial_nodes until two successive results agree to
/// tolerance * max(1, |result|); ConvergenceError otherwise.
double radial_overlap_quadrature(const RadialState& a, const RadialState& b, int k,
                                 const QuadratureOptions& options = {});

/// <r^k> for one state; k >= -2.
double radial_moment_quadrature(const RadialState& state, int k,
                                const QuadratureOptions& options = {});

}  // namespace hyshift::radial
