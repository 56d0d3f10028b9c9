#pragma once

#include "hyshift/exact_value.hpp"
#include "hyshift/half_int.hpp"
#include "hyshift/radial.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace hyshift {

/// |n l j m> of a hydrogen-like ion with nuclear charge Z.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  HalfInt j = kHalf;
  HalfInt m = kHalf;
  int Z = 1;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Throws std::invalid_argument unless l < n, j = l +- 1/2 >= 1/2, |m| <= j
/// with m half-odd, and n, Z >= 1.
void validate(const QuantumNumbers& qn);

/// "2p3/2 m=+1/2"
std::string describe(const QuantumNumbers& qn);

enum class SpinorKind {
  TypeOne,  // l = j - 1/2, l > 0
  TypeTwo,  // l = j + 1/2
  SWave,    // l = 0, j = 1/2
};

const char* to_string(SpinorKind kind);

/// Two-component coupled-basis state. Component 0 (spin up) multiplies
/// R_{n,l} Y_l^{m-1/2}, component 1 (spin down) multiplies R_{n,l} Y_l^{m+1/2}.
struct CoupledSpinor {
  QuantumNumbers qn;
  SpinorKind kind = SpinorKind::SWave;
  std::array<ExactValue, 2> coefficients;

  /// Orbital projection carried by a component.
  int orbital_m(int component) const {
    return (qn.m.twice() + (component == 0 ? -1 : 1)) / 2;
  }
  /// (-1)^l
  int parity() const { return qn.l % 2 == 0 ? 1 : -1; }
  radial::RadialState radial_state() const { return {qn.n, qn.l, qn.Z}; }
};

CoupledSpinor coupled_state(const QuantumNumbers& qn);

/// Angular-spin part of the spinor at (theta, phi), without R_{n,l}.
std::array<std::complex<double>, 2> evaluate_angular(const CoupledSpinor& s, double theta,
                                                     double phi);

/// Full spinor value in a0^{-3/2}. Requires r >= 0 and 0 <= theta <= pi.
std::array<std::complex<double>, 2> evaluate_spinor(const CoupledSpinor& s, double r,
                                                    double theta, double phi);

/// States sharing (n, j, m), ascending in l. Throws when j > n - 1/2, j < 1/2,
/// or m is not an allowed projection of j.
std::vector<CoupledSpinor> degenerate_subspace(int n, HalfInt j, HalfInt m, int Z);

/// Every |n l j m> with n in [n_min, n_max], ordered by (n, l, 2j, 2m).
std::vector<QuantumNumbers> enumerate_states(int n_min, int n_max, int Z);

}  // namespace hyshift
