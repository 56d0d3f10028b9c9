#pragma once

#include "hyshift/half_int.hpp"
#include "hyshift/potential.hpp"
#include "hyshift/states.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

// Brute-force verification: perturbation matrices assembled by direct 3D
// quadrature over pointwise-evaluated spinors, with no use of the closed-form
// shift formulas or of exact 3j values.
namespace hyshift::oracle {

/// Tensor-product grid: scaled Gauss-Laguerre in r, Gauss-Legendre in
/// cos(theta), uniform trapezoid in phi.
struct QuadratureGrid {
  std::size_t radial = 64;
  std::size_t polar = 10;
  std::size_t azimuthal = 32;

  /// Default orders for states up to l_max: polar 2(2 l_max + 3).
  static QuadratureGrid for_max_l(int l_max);
  QuadratureGrid refined() const { return {2 * radial, 2 * polar, 2 * azimuthal}; }

  /// Throws std::invalid_argument when the grid cannot integrate the given
  /// states and potential exactly (up to rounding).
  void check_sufficient(int n_max, int l_max, int max_m_difference, const PotentialSpec& v) const;
};

struct OracleOptions {
  /// Zero entries mean "use QuadratureGrid::for_max_l".
  std::size_t radial = 0;
  std::size_t polar = 0;
  std::size_t azimuthal = 0;
  /// Allowed refinement change, relative to max(1, |value|).
  double tolerance = 1e-10;
  /// Recompute on the refined grid and throw ConvergenceError on disagreement.
  bool certify = true;
};

struct ElementResult {
  std::complex<double> value;
  /// |value(grid) - value(refined grid)|; zero when not certified.
  double refinement_change = 0.0;
};

/// <bra|V|ket>. Both spinors must share Z.
ElementResult matrix_element(const CoupledSpinor& bra, const CoupledSpinor& ket,
                             const PotentialSpec& v, const OracleOptions& options = {});

/// Same, on one fixed grid with no refinement check.
std::complex<double> matrix_element_on(const CoupledSpinor& bra, const CoupledSpinor& ket,
                                       const PotentialSpec& v, const QuadratureGrid& grid);

struct SubspaceResult {
  std::vector<CoupledSpinor> states;                   // ascending l
  std::vector<std::vector<std::complex<double>>> matrix;
  std::vector<double> eigenvalues;                     // descending
  double max_refinement_change = 0.0;
};

/// First-order shifts of the (n, j, m) level: eigenvalues of V restricted to
/// the degenerate subspace.
SubspaceResult degenerate_subspace_shifts(int n, HalfInt j, HalfInt m, int Z,
                                          const PotentialSpec& v,
                                          const OracleOptions& options = {});

struct SelectionReport {
  bool passed = true;
  double max_abs = 0.0;            // largest forbidden element seen
  std::size_t checked = 0;
  std::string worst;               // "<bra|V|ket>" of the largest element
  std::vector<std::string> violations;
};

/// Every <n j m'|V|n j m> with m' != m, over both l of the level, must vanish.
SelectionReport m_conservation_check(int n, HalfInt j, int Z, const PotentialSpec& v,
                                     double threshold = 1e-10, const OracleOptions& options = {});

/// Elements between states whose parities multiply with the potential's to
/// odd must vanish. Mixed-parity potentials forbid nothing.
SelectionReport parity_check(int n, HalfInt j, HalfInt m, int Z, const PotentialSpec& v,
                             double threshold = 1e-10, const OracleOptions& options = {});

/// Descending eigenvalues of a 1x1 or 2x2 hermitian matrix.
std::vector<double> hermitian_eigenvalues(const std::vector<std::vector<std::complex<double>>>& h);

}  // namespace hyshift::oracle
