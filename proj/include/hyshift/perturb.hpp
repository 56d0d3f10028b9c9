#pragma once

#include "hyshift/exact_value.hpp"
#include "hyshift/half_int.hpp"
#include "hyshift/states.hpp"

#include <optional>
#include <utility>
#include <vector>

// Closed-form first-order level shifts in the coupled basis.
// Units: energies in Rydberg, lengths in Bohr radii, so a quadratic coupling
// lambda is in Ry/a0^2 and a linear one in Ry/a0.
namespace hyshift::perturb {

/// CODATA 2018 fine-structure constant.
inline constexpr double kFineStructureConstant = 7.2973525693e-3;
inline constexpr double kAlphaSquared = kFineStructureConstant * kFineStructureConstant;

enum class Branch { Plus, Minus };

struct EnergyShift {
  double value = 0.0;  // Ry
  std::optional<Branch> branch;
  /// l of the unmixed state this shift connects to as the mixing term goes
  /// to zero; empty when the eigenstates stay equal mixtures (linear field).
  std::optional<int> connected_l;
};

/// Plus is always numerically >= minus.
struct ShiftPair {
  EnergyShift plus;
  EnergyShift minus;
};

/// E_nj = -(Z^2/n^2)[1 + (Z^2 alpha^2/n)(1/(j+1/2) - 3/(4n))] Ry.
double fine_structure_energy(int n, HalfInt j, int Z, double alpha_squared = kAlphaSquared);
Rational fine_structure_energy_exact(int n, HalfInt j, int Z, const Rational& alpha_squared);

/// Signed linear-field coefficient (3n/4Z) m sqrt(n^2 - (j+1/2)^2) / (j(j+1)),
/// in units of lambda_linear * a0.
ExactValue linear_shift_coefficient(int n, HalfInt j, HalfInt m, int Z);

/// +-|Delta E^L| for V = lambda_linear z. Zero pair when j = n - 1/2.
ShiftPair linear_shift(int n, HalfInt j, HalfInt m, double lambda_linear, int Z);

/// Delta E^Q / lambda in a0^2:
///   (n/2Z)^2 [5n^2 + 1 - 3l(l+1)] (1 - m^2/(j(j+1))).
Rational quadratic_shift_coefficient(const QuantumNumbers& qn);

/// First-order shift of |n l j m> under V = lambda z^2.
EnergyShift quadratic_shift(const QuantumNumbers& qn, double lambda);

/// Eigenvalues of [[h11, h12], [h12*, h22]], returned as (upper, lower).
std::pair<double, double> hermitian2x2_eigenvalues(double h11, double h22, double h12_abs2);

/// Shifts of the (n, j, m) subspace under V = lambda (z - z0)^2, descending.
/// Two entries when both l = j -+ 1/2 exist, otherwise the single diagonal
/// element lambda z0^2 + Delta E^Q.
std::vector<EnergyShift> displaced_quadratic_shift(int n, HalfInt j, HalfInt m, double lambda,
                                                   double z0, int Z);

/// V = gamma (x^2 + y^2 + beta^2 z^2):
///   gamma <r^2> + Delta E^Q with lambda = gamma (beta^2 - 1).
EnergyShift vdw_shift(const QuantumNumbers& qn, double gamma, double beta);
Rational vdw_shift_exact(const QuantumNumbers& qn, const Rational& gamma, const Rational& beta_squared);

/// Wall coupling gamma(d) in Ry/a0^2 for which the generalized van der Waals
/// shift with beta^2 = 2 reproduces lennard_jones_shift: -(a0/d)^3 / 4.
double lennard_jones_gamma(double d);
Rational lennard_jones_gamma_exact(const Rational& d);

/// Atom-wall shift, hydrogen only (qn.Z must be 1), d in a0 and > 0:
///   -(a0/2d)^3 (n^2/2)[5n^2 + 1 - 3l(l+1)][3 - m^2/(j(j+1))] Ry.
EnergyShift lennard_jones_shift(const QuantumNumbers& qn, double d);
Rational lennard_jones_shift_exact(const QuantumNumbers& qn, const Rational& d);

}  // namespace hyshift::perturb
