#pragma once

#include "hyshift/potential.hpp"
#include "hyshift/table.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyshift::cli {

enum class Command { Spectrum, Shift, Verify, Scan, Regime };
enum class OutputFormat { Csv, Json };
enum class PotentialKind { None, Linear, Quadratic, Displaced, VdW, LennardJones };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitNotConverged = 3;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Carries the help text when --help is given.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Spectrum;
  int n_min = 1;
  int n_max = 4;
  int Z = 1;
  PotentialKind potential = PotentialKind::None;

  double lambda = 1.0;  // Ry/a0^2 (Ry/a0 for linear)
  double z0 = 0.5;      // a0
  double gamma = 1.0;   // Ry/a0^2
  double beta = 0.5;
  double d = 10.0;      // a0

  OutputFormat format = OutputFormat::Csv;
  double tolerance = 1e-9;             // closed form vs oracle, relative
  double quadrature_tolerance = 1e-10; // oracle grid refinement
  std::size_t radial_nodes = 0;
  std::size_t polar_nodes = 0;
  std::size_t azimuthal_nodes = 0;
  bool inject_fault = false;

  std::string scan_variable;  // lambda | z0 | gamma | beta | d
  double scan_from = 0.0;
  double scan_to = 0.0;
  double scan_step = 0.0;

  double pressure = 101325.0;   // Pa
  double temperature = 293.15;  // K

  std::string out_path;  // empty: standard output

  /// Throws UsageError when the invariants (non-empty selectors, positive
  /// tolerance, valid scan range) fail.
  void validate() const;
};

/// Parses flags, with an optional --config file of `key = value` lines.
/// Flags override the file, which overrides defaults. UsageError on bad input.
RunConfig parse_arguments(int argc, const char* const* argv);

PotentialKind parse_potential(const std::string& name);
std::optional<oracle::PotentialSpec> potential_spec(const RunConfig& config);

/// Rows (n, l, j, m, E_fine, dE, E_total) ordered by (n, l, 2j, 2m).
Table cmd_spectrum(const RunConfig& config);

/// Closed-form shifts for the chosen potential, one row per state or branch.
Table cmd_shift(const RunConfig& config);

struct VerifyReport {
  Table table;
  bool passed = true;
};
/// Oracle comparison; ConvergenceError propagates.
VerifyReport cmd_verify(const RunConfig& config);

/// Long-format sweep of config.scan_variable.
Table cmd_scan(const RunConfig& config);

/// Validity-regime report as (quantity, value, unit) rows.
Table cmd_regime(const RunConfig& config);

/// Entry point behind the executable. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyshift::cli
