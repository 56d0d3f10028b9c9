#include "hyshift/cli.hpp"

#include "hyshift/perturb.hpp"
#include "hyshift/quadrature.hpp"
#include "hyshift/regime.hpp"
#include "hyshift/states.hpp"
#include "hyshift/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

namespace hyshift::cli {

namespace {

using CT = ColumnType;

const std::map<std::string, Command> kCommands{{"spectrum", Command::Spectrum},
                                               {"shift", Command::Shift},
                                               {"verify", Command::Verify},
                                               {"scan", Command::Scan},
                                               {"regime", Command::Regime}};

const std::map<std::string, PotentialKind> kPotentials{{"none", PotentialKind::None},
                                                       {"linear", PotentialKind::Linear},
                                                       {"quadratic", PotentialKind::Quadratic},
                                                       {"dq", PotentialKind::Displaced},
                                                       {"vdw", PotentialKind::VdW},
                                                       {"lj", PotentialKind::LennardJones}};

std::string branch_label(const perturb::EnergyShift& s) {
  if (!s.branch) return "";
  return *s.branch == perturb::Branch::Plus ? "+" : "-";
}

struct ShiftRow {
  int n;
  int l;  // -1 when the eigenstate has no definite l
  HalfInt j;
  HalfInt m;
  std::string branch;
  double value;
};

[[noreturn]] void usage(const std::string& message) { throw UsageError(message); }

void require_potential(const RunConfig& config) {
  if (config.potential == PotentialKind::None) usage("this command needs --potential");
  if (config.potential == PotentialKind::LennardJones && config.Z != 1) {
    usage("the Lennard-Jones wall shift is defined for hydrogen only (--Z 1)");
  }
}

// Closed-form shifts for every state (or branch) in the configured n range.
std::vector<ShiftRow> shift_rows(const RunConfig& config) {
  require_potential(config);
  std::vector<ShiftRow> rows;
  const int Z = config.Z;
  switch (config.potential) {
    case PotentialKind::Quadratic:
    case PotentialKind::VdW:
    case PotentialKind::LennardJones:
      for (const auto& qn : enumerate_states(config.n_min, config.n_max, Z)) {
        double value = 0.0;
        if (config.potential == PotentialKind::Quadratic) value = perturb::quadratic_shift(qn, config.lambda).value;
        if (config.potential == PotentialKind::VdW) value = perturb::vdw_shift(qn, config.gamma, config.beta).value;
        if (config.potential == PotentialKind::LennardJones) value = perturb::lennard_jones_shift(qn, config.d).value;
        rows.push_back({qn.n, qn.l, qn.j, qn.m, "", value});
      }
      break;
    case PotentialKind::Linear:
    case PotentialKind::Displaced:
      for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int tj = 1; tj <= 2 * n - 1; tj += 2) {
          const HalfInt j = HalfInt::from_twice(tj);
          for (int tm = -tj; tm <= tj; tm += 2) {
            const HalfInt m = HalfInt::from_twice(tm);
            if (config.potential == PotentialKind::Linear) {
              if (tj == 2 * n - 1) {
                rows.push_back({n, (tj - 1) / 2, j, m, "", 0.0});
                continue;
              }
              const auto pair = perturb::linear_shift(n, j, m, config.lambda, Z);
              rows.push_back({n, -1, j, m, "+", pair.plus.value});
              rows.push_back({n, -1, j, m, "-", pair.minus.value});
            } else {
              for (const auto& s : perturb::displaced_quadratic_shift(n, j, m, config.lambda, config.z0, Z)) {
                rows.push_back({n, s.connected_l.value_or(-1), j, m, branch_label(s), s.value});
              }
            }
          }
        }
      }
      break;
    case PotentialKind::None:
      break;
  }
  return rows;
}

// dE attached to a definite-l state, for the spectrum table.
double state_shift(const RunConfig& config, const QuantumNumbers& qn) {
  switch (config.potential) {
    case PotentialKind::None: return 0.0;
    case PotentialKind::Quadratic: return perturb::quadratic_shift(qn, config.lambda).value;
    case PotentialKind::VdW: return perturb::vdw_shift(qn, config.gamma, config.beta).value;
    case PotentialKind::LennardJones: return perturb::lennard_jones_shift(qn, config.d).value;
    case PotentialKind::Linear: {
      if (degenerate_subspace(qn.n, qn.j, qn.m, qn.Z).size() == 1) return 0.0;
      const auto pair = perturb::linear_shift(qn.n, qn.j, qn.m, config.lambda, qn.Z);
      // "+" of the formula goes with l = j - 1/2
      return qn.l * 2 + 1 == qn.j.twice() ? pair.plus.value : pair.minus.value;
    }
    case PotentialKind::Displaced:
      for (const auto& s : perturb::displaced_quadratic_shift(qn.n, qn.j, qn.m, config.lambda, config.z0, qn.Z)) {
        if (s.connected_l == qn.l) return s.value;
      }
      break;
  }
  throw std::logic_error("state_shift: no branch for state");
}

void write_table(const Table& table, const RunConfig& config, std::ostream& out) {
  auto emit = [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) table.write_json(os);
    else table.write_csv(os);
  };
  if (config.out_path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(config.out_path);
  if (!file) usage("cannot open output file " + config.out_path);
  emit(file);
}

}  // namespace

void RunConfig::validate() const {
  if (n_min < 1 || n_max < n_min) usage("empty n range: need 1 <= n-min <= n-max");
  if (Z < 1) usage("Z must be >= 1");
  if (!(tolerance > 0)) usage("tolerance must be > 0");
  if (!(quadrature_tolerance > 0)) usage("quadrature tolerance must be > 0");
  if (!std::isfinite(lambda) || !std::isfinite(z0) || !std::isfinite(gamma) || !std::isfinite(beta)) {
    usage("potential parameters must be finite");
  }
  if (!(d > 0)) usage("d must be > 0");
  if (command == Command::Scan) {
    static const std::vector<std::string> vars{"lambda", "z0", "gamma", "beta", "d"};
    if (std::find(vars.begin(), vars.end(), scan_variable) == vars.end()) {
      usage("--scan-var must be one of lambda, z0, gamma, beta, d");
    }
    if (!(scan_step > 0)) usage("--scan-step must be > 0");
    if (!(scan_to >= scan_from) || !std::isfinite(scan_from) || !std::isfinite(scan_to)) {
      usage("scan range must be finite with --scan-to >= --scan-from");
    }
    if (scan_variable == "d" && !(scan_from > 0)) usage("d scan must stay > 0");
  }
  if (command == Command::Regime && (!(pressure > 0) || !(temperature > 0))) {
    usage("pressure and temperature must be > 0");
  }
}

PotentialKind parse_potential(const std::string& name) {
  const auto it = kPotentials.find(name);
  if (it == kPotentials.end()) usage("unknown potential '" + name + "'");
  return it->second;
}

std::optional<oracle::PotentialSpec> potential_spec(const RunConfig& c) {
  switch (c.potential) {
    case PotentialKind::None: return std::nullopt;
    case PotentialKind::Linear: return oracle::Linear{c.lambda};
    case PotentialKind::Quadratic: return oracle::Quadratic{c.lambda};
    case PotentialKind::Displaced: return oracle::DisplacedQuadratic{c.lambda, c.z0};
    case PotentialKind::VdW: return oracle::GeneralizedVdW{c.gamma, c.beta};
    case PotentialKind::LennardJones: return oracle::LennardJones{c.d};
  }
  return std::nullopt;
}

RunConfig parse_arguments(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Fine-structure levels and first-order shifts of hydrogen-like ions"};
  app.set_config("--config", "", "flat `key = value` file; flags take precedence");

  std::string command = "spectrum";
  std::string potential = "none";
  std::string format = "csv";
  app.add_option("--command", command, "spectrum | shift | verify | scan | regime")
      ->check(CLI::IsMember({"spectrum", "shift", "verify", "scan", "regime"}));
  app.add_option("--n-min", c.n_min, "smallest principal quantum number");
  app.add_option("--n-max", c.n_max, "largest principal quantum number");
  app.add_option("--Z", c.Z, "nuclear charge");
  app.add_option("--potential", potential, "none | linear | quadratic | dq | vdw | lj")
      ->check(CLI::IsMember({"none", "linear", "quadratic", "dq", "vdw", "lj"}));
  app.add_option("--lambda", c.lambda, "coupling, Ry/a0^2 (Ry/a0 for linear)");
  app.add_option("--z0", c.z0, "displacement of the oscillator centre, a0");
  app.add_option("--gamma", c.gamma, "van der Waals coupling, Ry/a0^2");
  app.add_option("--beta", c.beta, "van der Waals anisotropy");
  app.add_option("--d", c.d, "wall distance, a0");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", c.tolerance, "relative tolerance for verify");
  app.add_option("--out", c.out_path, "write output here instead of stdout");
  app.add_option("--radial-nodes", c.radial_nodes, "oracle radial order (0 = default)");
  app.add_option("--polar-nodes", c.polar_nodes, "oracle polar order (0 = default)");
  app.add_option("--azimuthal-nodes", c.azimuthal_nodes, "oracle azimuthal order (0 = default)");
  app.add_option("--quad-tol", c.quadrature_tolerance, "oracle grid-refinement tolerance");
  app.add_flag("--inject-fault", c.inject_fault,
               "verify only: perturb the first nonzero closed-form value by 1e-6 relative");
  app.add_option("--scan-var", c.scan_variable, "lambda | z0 | gamma | beta | d");
  app.add_option("--scan-from", c.scan_from, "first scan value");
  app.add_option("--scan-to", c.scan_to, "last scan value (inclusive)");
  app.add_option("--scan-step", c.scan_step, "scan increment (> 0)");
  app.add_option("--pressure", c.pressure, "gas pressure, Pa");
  app.add_option("--temperature", c.temperature, "gas temperature, K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }
  c.command = kCommands.at(command);
  c.potential = parse_potential(potential);
  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  c.validate();
  return c;
}

Table cmd_spectrum(const RunConfig& config) {
  config.validate();
  if (config.potential == PotentialKind::LennardJones && config.Z != 1) {
    usage("the Lennard-Jones wall shift is defined for hydrogen only (--Z 1)");
  }
  Table table({{"n", CT::Integer},
               {"l", CT::Integer},
               {"j", CT::Text},
               {"m", CT::Text},
               {"E_fine[Ry]", CT::Real},
               {"dE[Ry]", CT::Real},
               {"E_total[Ry]", CT::Real}});
  for (const auto& qn : enumerate_states(config.n_min, config.n_max, config.Z)) {
    const double fine = perturb::fine_structure_energy(qn.n, qn.j, qn.Z);
    const double shift = state_shift(config, qn);
    table.add_row({std::int64_t{qn.n}, std::int64_t{qn.l}, qn.j.to_string(), qn.m.to_string(), fine,
                   shift, fine + shift});
  }
  return table;
}

Table cmd_shift(const RunConfig& config) {
  config.validate();
  Table table({{"n", CT::Integer},
               {"l", CT::Integer},
               {"j", CT::Text},
               {"m", CT::Text},
               {"branch", CT::Text},
               {"dE[Ry]", CT::Real}});
  for (const auto& r : shift_rows(config)) {
    table.add_row({std::int64_t{r.n}, std::int64_t{r.l}, r.j.to_string(), r.m.to_string(), r.branch, r.value});
  }
  return table;
}

VerifyReport cmd_verify(const RunConfig& config) {
  config.validate();
  verify::VerifyOptions options;
  options.n_min = config.n_min;
  options.n_max = config.n_max;
  options.charges = {config.Z};
  if (auto spec = potential_spec(config)) options.potentials = {*spec};
  options.tolerance = config.tolerance;
  options.quadrature.radial = config.radial_nodes;
  options.quadrature.polar = config.polar_nodes;
  options.quadrature.azimuthal = config.azimuthal_nodes;
  options.quadrature.tolerance = config.quadrature_tolerance;
  options.inject_fault = config.inject_fault;
  auto outcome = verify::run_verification(options);
  return {std::move(outcome.table), outcome.passed};
}

Table cmd_scan(const RunConfig& config) {
  config.validate();
  require_potential(config);
  Table table({{"variable", CT::Text},
               {"value", CT::Real},
               {"n", CT::Integer},
               {"l", CT::Integer},
               {"j", CT::Text},
               {"m", CT::Text},
               {"branch", CT::Text},
               {"dE[Ry]", CT::Real}});
  const double span = config.scan_to - config.scan_from;
  const auto steps = static_cast<long>(std::floor(span / config.scan_step * (1 + 1e-12) + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double value = config.scan_from + static_cast<double>(i) * config.scan_step;
    RunConfig point = config;
    if (config.scan_variable == "lambda") point.lambda = value;
    else if (config.scan_variable == "z0") point.z0 = value;
    else if (config.scan_variable == "gamma") point.gamma = value;
    else if (config.scan_variable == "beta") point.beta = value;
    else point.d = value;
    for (const auto& r : shift_rows(point)) {
      table.add_row({config.scan_variable, value, std::int64_t{r.n}, std::int64_t{r.l}, r.j.to_string(),
                     r.m.to_string(), r.branch, r.value});
    }
  }
  return table;
}

Table cmd_regime(const RunConfig& config) {
  config.validate();
  const auto r = perturb::regime_check(config.pressure, config.temperature, config.n_max);
  Table table({{"quantity", CT::Text}, {"value", CT::Real}, {"unit", CT::Text}});
  auto row = [&](const char* q, double v, const char* unit) { table.add_row({std::string(q), v, std::string(unit)}); };
  auto flag = [&](const char* q, bool v) { row(q, v ? 1.0 : 0.0, "flag"); };
  row("pressure", r.pressure_pa, "Pa");
  row("temperature", r.temperature_k, "K");
  row("n", r.n, "");
  row("density_ratio", r.density_ratio, "");
  row("volume_per_atom", r.volume_per_atom_nm3, "nm^3");
  row("distance", r.distance_a0, "a0");
  row("wall_scale", r.wall_scale, "Ry");
  row("wall_shift_scale", r.wall_shift_scale, "Ry");
  row("alpha_squared", r.fine_structure_scale, "");
  row("fine_structure_level", r.fine_structure_level, "Ry");
  row("lamb_s_scale", r.lamb_s_scale, "Ry");
  row("lamb_other_scale", r.lamb_other_scale, "Ry");
  row("hyperfine_scale", r.hyperfine_scale, "Ry");
  flag("atomic_gas", r.atomic_gas);
  flag("fine_structure_dominates", r.fine_structure_dominates);
  flag("hyperfine_negligible", r.hyperfine_negligible);
  flag("coupled_basis_applies", r.coupled_basis_applies);
  row("breakdown_n", r.breakdown_n, "");
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_arguments(argc, argv);
    switch (config.command) {
      case Command::Spectrum: write_table(cmd_spectrum(config), config, out); return kExitOk;
      case Command::Shift: write_table(cmd_shift(config), config, out); return kExitOk;
      case Command::Scan: write_table(cmd_scan(config), config, out); return kExitOk;
      case Command::Regime: write_table(cmd_regime(config), config, out); return kExitOk;
      case Command::Verify: {
        const auto report = cmd_verify(config);
        write_table(report.table, config, out);
        if (!report.passed) {
          for (std::size_t i = 0; i < report.table.size(); ++i) {
            if (report.table.integer(i, "pass") == 0) {
              err << "verify: FAIL " << report.table.text(i, "check") << ' '
                  << report.table.text(i, "potential") << " n=" << report.table.integer(i, "n")
                  << " j=" << report.table.text(i, "j") << " m=" << report.table.text(i, "m")
                  << " Z=" << report.table.integer(i, "Z") << " closed_form="
                  << format_real(report.table.real(i, "closed_form[Ry]"))
                  << " oracle=" << format_real(report.table.real(i, "oracle[Ry]")) << '\n';
            }
          }
          return kExitVerificationFailed;
        }
        return kExitOk;
      }
    }
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyshift::cli
