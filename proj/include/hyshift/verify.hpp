#pragma once

#include "hyshift/oracle.hpp"
#include "hyshift/potential.hpp"
#include "hyshift/table.hpp"

#include <vector>

namespace hyshift::verify {

/// Closed-form first-order shifts of the (n, j, m) subspace under v,
/// descending, one per state of degenerate_subspace(n, j, m, Z).
std::vector<double> closed_form_shifts(int n, HalfInt j, HalfInt m, int Z,
                                       const oracle::PotentialSpec& v);

/// Relative agreement with an absolute floor for values that vanish.
bool agrees(double closed_form, double oracle_value, double relative_tolerance,
            double absolute_floor = 1e-12);

inline constexpr double kSelectionThreshold = 1e-10;

struct VerifyOptions {
  int n_min = 1;
  int n_max = 4;
  std::vector<int> charges{1};
  std::vector<oracle::PotentialSpec> potentials;
  double tolerance = 1e-9;
  oracle::OracleOptions quadrature;
  /// Negative control: scales the first closed-form value larger than 1e-6
  /// in magnitude by (1 + 1e-6).
  bool inject_fault = false;
  bool selection_rules = true;
};

struct VerifyOutcome {
  Table table;
  bool passed = true;
  double max_relative_deviation = 0.0;
  std::size_t failures = 0;
};

/// Eigenvalue rows for every subspace, then parity and m-conservation rows.
/// Lennard-Jones is skipped for Z != 1 (the wall shift is defined for hydrogen).
/// Propagates ConvergenceError from the oracle.
VerifyOutcome run_verification(const VerifyOptions& options);

/// The potentials exercised when none are chosen explicitly.
std::vector<oracle::PotentialSpec> default_potentials();

}  // namespace hyshift::verify
