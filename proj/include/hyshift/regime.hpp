#pragma once

namespace hyshift::perturb {

inline constexpr double kNormalPressure = 101325.0;      // Pa
inline constexpr double kNormalTemperature = 293.15;     // K
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kBohrRadiusNm = 0.0529177210903; // nm
inline constexpr double kElectronProtonMassRatio = 1.0 / 1836.15267343;

/// How much larger one scale must be than another to count as dominating.
inline constexpr double kDominanceMargin = 10.0;

/// Order-of-magnitude comparison of the atom-wall (Lennard-Jones) shift with
/// the competing corrections, for a gas at pressure P and temperature T whose
/// volume per atom sets the wall distance d.
struct RegimeReport {
  double pressure_pa = 0;
  double temperature_k = 0;
  int n = 1;

  double density_ratio = 0;        // (P0/P)(T/T0)
  double volume_per_atom_nm3 = 0;  // d^3 = kT/P
  double distance_a0 = 0;          // d
  double wall_scale = 0;           // (a0/2d)^3
  double wall_shift_scale = 0;     // (a0/2d)^3 n^4, growth of the LJ shift
  double fine_structure_scale = 0; // alpha^2
  double fine_structure_level = 0; // alpha^2 / n^3
  double lamb_s_scale = 0;         // 1e-6 / n^3 Ry
  double lamb_other_scale = 0;     // 1e-9 / n^3 Ry (upper bound)
  double hyperfine_scale = 0;      // alpha^2 m_e / m_p

  bool atomic_gas = false;             // density_ratio >> 1
  bool fine_structure_dominates = false;
  bool hyperfine_negligible = false;   // m stays a good quantum number
  bool coupled_basis_applies = false;
  /// Largest n for which fine structure still dominates the wall shift
  /// (fine structure falls as n^-3 while the wall shift grows as n^4).
  int breakdown_n = 0;
};

/// Throws std::invalid_argument for non-positive P, T or n.
RegimeReport regime_check(double pressure_pa, double temperature_k, int n);

}  // namespace hyshift::perturb
