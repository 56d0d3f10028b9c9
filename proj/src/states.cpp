#include "hyshift/states.hpp"

#include "hyshift/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyshift {

namespace {

constexpr const char* kOrbitalLetters = "spdfghiklmnoqrtuv";

}  // namespace

void validate(const QuantumNumbers& qn) {
  if (qn.n < 1) throw std::invalid_argument("quantum numbers: n must be >= 1");
  if (qn.Z < 1) throw std::invalid_argument("quantum numbers: Z must be >= 1");
  if (qn.l < 0 || qn.l >= qn.n) throw std::invalid_argument("quantum numbers: need 0 <= l < n");
  if (!qn.j.is_half_odd() || qn.j < kHalf) {
    throw std::invalid_argument("quantum numbers: j must be a half-odd integer >= 1/2");
  }
  const int twice_l = 2 * qn.l;
  if (qn.j.twice() != twice_l - 1 && qn.j.twice() != twice_l + 1) {
    throw std::invalid_argument("quantum numbers: j must equal l +- 1/2");
  }
  if (!qn.m.is_half_odd() || qn.m.abs() > qn.j) {
    throw std::invalid_argument("quantum numbers: m must be a half-odd integer with |m| <= j");
  }
}

std::string describe(const QuantumNumbers& qn) {
  std::string out = std::to_string(qn.n);
  out += qn.l < 17 ? kOrbitalLetters[qn.l] : '?';
  out += qn.j.to_string();
  out += " m=";
  if (qn.m.twice() > 0) out += '+';
  out += qn.m.to_string();
  return out;
}

const char* to_string(SpinorKind kind) {
  switch (kind) {
    case SpinorKind::TypeOne: return "type-one";
    case SpinorKind::TypeTwo: return "type-two";
    case SpinorKind::SWave: return "s-wave";
  }
  return "?";
}

CoupledSpinor coupled_state(const QuantumNumbers& qn) {
  validate(qn);
  CoupledSpinor s;
  s.qn = qn;
  // All coefficients below are square roots of rationals in twice-units:
  // with J = 2j and M = 2m, j +- m = (J +- M)/2.
  const int J = qn.j.twice();
  const int M = qn.m.twice();
  if (qn.l == 0) {
    s.kind = SpinorKind::SWave;
    s.coefficients[0] = ExactValue::from_rational(Rational(M + 1, 2));
    s.coefficients[1] = ExactValue::from_rational(Rational(1 - M, 2));
  } else if (J == 2 * qn.l + 1) {
    // (sqrt(j+m), sqrt(j-m)) / sqrt(2j)
    s.kind = SpinorKind::TypeOne;
    s.coefficients[0] = ExactValue::signed_sqrt(1, Rational(J + M, 2 * J));
    s.coefficients[1] = ExactValue::signed_sqrt(1, Rational(J - M, 2 * J));
  } else {
    // (sqrt(j-m+1), -sqrt(j+m+1)) / sqrt(2(j+1))
    s.kind = SpinorKind::TypeTwo;
    s.coefficients[0] = ExactValue::signed_sqrt(1, Rational(J - M + 2, 2 * (J + 2)));
    s.coefficients[1] = ExactValue::signed_sqrt(-1, Rational(J + M + 2, 2 * (J + 2)));
  }
  return s;
}

std::array<std::complex<double>, 2> evaluate_angular(const CoupledSpinor& s, double theta,
                                                     double phi) {
  std::array<std::complex<double>, 2> out{};
  for (int c = 0; c < 2; ++c) {
    if (s.coefficients[c].is_zero()) continue;
    out[c] = s.coefficients[c].to_double() * spherical_harmonic(s.qn.l, s.orbital_m(c), theta, phi);
  }
  return out;
}

std::array<std::complex<double>, 2> evaluate_spinor(const CoupledSpinor& s, double r,
                                                    double theta, double phi) {
  if (!(r >= 0)) throw std::invalid_argument("evaluate_spinor: r must be >= 0");
  if (!(theta >= 0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("evaluate_spinor: theta must lie in [0, pi]");
  }
  if (!std::isfinite(phi)) throw std::invalid_argument("evaluate_spinor: phi must be finite");
  const double radial_value = radial::radial_wavefunction(s.radial_state(), r);
  auto out = evaluate_angular(s, theta, phi);
  for (auto& v : out) v *= radial_value;
  return out;
}

std::vector<CoupledSpinor> degenerate_subspace(int n, HalfInt j, HalfInt m, int Z) {
  if (n < 1) throw std::invalid_argument("degenerate_subspace: n must be >= 1");
  if (!j.is_half_odd() || j < kHalf) {
    throw std::invalid_argument("degenerate_subspace: j must be a half-odd integer >= 1/2");
  }
  if (j.twice() > 2 * n - 1) {
    throw std::invalid_argument("degenerate_subspace: no level with j > n - 1/2");
  }
  std::vector<CoupledSpinor> states;
  const int lower = (j.twice() - 1) / 2;
  for (int l : {lower, lower + 1}) {
    if (l <= n - 1) states.push_back(coupled_state({n, l, j, m, Z}));
  }
  return states;
}

std::vector<QuantumNumbers> enumerate_states(int n_min, int n_max, int Z) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("enumerate_states: empty n range");
  std::vector<QuantumNumbers> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int twice_j : {2 * l - 1, 2 * l + 1}) {
        if (twice_j < 1) continue;
        for (int twice_m = -twice_j; twice_m <= twice_j; twice_m += 2) {
          out.push_back({n, l, HalfInt::from_twice(twice_j), HalfInt::from_twice(twice_m), Z});
        }
      }
    }
  }
  return out;
}

}  // namespace hyshift
