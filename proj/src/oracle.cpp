#include "hyshift/oracle.hpp"

#include "hyshift/quadrature.hpp"
#include "hyshift/radial.hpp"
#include "hyshift/spherical_harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyshift::oracle {

namespace {

using cplx = std::complex<double>;

// Spinor angular components tabulated on the (theta, phi) part of a grid,
// index [polar * azimuthal_count + azimuthal].
struct SampledSpinor {
  const CoupledSpinor* spinor = nullptr;
  std::vector<std::array<cplx, 2>> angular;
};

struct Nodes {
  const quadrature::Rule* radial;
  const quadrature::Rule* polar;
  quadrature::Rule azimuthal;
  std::vector<double> sin_theta;
};

Nodes make_nodes(const QuadratureGrid& grid) {
  Nodes nodes{&quadrature::gauss_laguerre(grid.radial), &quadrature::gauss_legendre(grid.polar),
              quadrature::periodic_trapezoid(grid.azimuthal), {}};
  for (double c : nodes.polar->nodes) nodes.sin_theta.push_back(std::sqrt(std::fmax(0.0, 1 - c * c)));
  return nodes;
}

SampledSpinor sample(const CoupledSpinor& s, const Nodes& nodes) {
  SampledSpinor out;
  out.spinor = &s;
  const std::array<double, 2> coeff{s.coefficients[0].to_double(), s.coefficients[1].to_double()};
  const std::size_t np = nodes.polar->size();
  const std::size_t na = nodes.azimuthal.size();
  out.angular.resize(np * na);
  for (std::size_t p = 0; p < np; ++p) {
    const double cos_t = nodes.polar->nodes[p];
    std::array<double, 2> theta_part{};
    for (int c = 0; c < 2; ++c) {
      if (coeff[c] != 0.0) {
        theta_part[c] = coeff[c] * spherical_harmonic_theta(s.qn.l, s.orbital_m(c), cos_t, nodes.sin_theta[p]);
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      const double phi = nodes.azimuthal.nodes[a];
      auto& cell = out.angular[p * na + a];
      for (int c = 0; c < 2; ++c) {
        cell[c] = theta_part[c] == 0.0 ? cplx{} : std::polar(1.0, s.orbital_m(c) * phi) * theta_part[c];
      }
    }
  }
  return out;
}

cplx integrate(const SampledSpinor& bra, const SampledSpinor& ket, const PotentialSpec& v,
               const Nodes& nodes) {
  const auto& a = *bra.spinor;
  const auto& b = *ket.spinor;
  if (a.qn.Z != b.qn.Z) throw std::invalid_argument("matrix_element: spinors must share Z");
  const radial::RadialState ra = a.radial_state();
  const radial::RadialState rb = b.radial_state();
  // exp(-Z r/n_a - Z r/n_b) is the Laguerre weight in x = s r.
  const double s = static_cast<double>(a.qn.Z) / a.qn.n + static_cast<double>(b.qn.Z) / b.qn.n;

  const auto& rr = *nodes.radial;
  std::vector<double> radius(rr.size()), radial_weight(rr.size());
  for (std::size_t i = 0; i < rr.size(); ++i) {
    const double r = rr.nodes[i] / s;
    radius[i] = r;
    radial_weight[i] = rr.weights[i] / s * r * r * radial::radial_polynomial_part(ra, r) *
                       radial::radial_polynomial_part(rb, r);
  }

  const std::size_t np = nodes.polar->size();
  const std::size_t na = nodes.azimuthal.size();
  std::complex<long double> total{};
  for (std::size_t p = 0; p < np; ++p) {
    const double cos_t = nodes.polar->nodes[p];
    const double sin_t = nodes.sin_theta[p];
    for (std::size_t az = 0; az < na; ++az) {
      const std::size_t cell = p * na + az;
      const cplx overlap = std::conj(bra.angular[cell][0]) * ket.angular[cell][0] +
                           std::conj(bra.angular[cell][1]) * ket.angular[cell][1];
      if (overlap == cplx{}) continue;
      const double phi = nodes.azimuthal.nodes[az];
      const double ux = sin_t * std::cos(phi);
      const double uy = sin_t * std::sin(phi);
      long double radial_sum = 0;
      for (std::size_t i = 0; i < rr.size(); ++i) {
        const double r = radius[i];
        radial_sum += radial_weight[i] * evaluate_cartesian(v, r * ux, r * uy, r * cos_t);
      }
      const double w = nodes.polar->weights[p] * nodes.azimuthal.weights[az];
      total += std::complex<long double>(overlap.real(), overlap.imag()) * (radial_sum * w);
    }
  }
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

QuadratureGrid resolve(const OracleOptions& options, int l_max) {
  QuadratureGrid grid = QuadratureGrid::for_max_l(l_max);
  if (options.radial) grid.radial = options.radial;
  if (options.polar) grid.polar = options.polar;
  if (options.azimuthal) grid.azimuthal = options.azimuthal;
  return grid;
}

bool within(double change, cplx value, double tolerance) {
  return change <= tolerance * std::fmax(1.0, std::abs(value));
}

std::string element_label(const CoupledSpinor& bra, const CoupledSpinor& ket, const PotentialSpec& v) {
  return "<" + describe(bra.qn) + "|" + name(v) + "|" + describe(ket.qn) + ">";
}

// Assembles all <a|V|b> for the listed states, certified against the
// refined grid when requested. Row-major over (bra, ket).
struct Assembly {
  std::vector<std::vector<cplx>> values;
  double max_change = 0.0;
};

Assembly assemble(const std::vector<CoupledSpinor>& states, const PotentialSpec& v,
                  const OracleOptions& options,
                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  int l_max = 0, n_max = 1, m_span = 0;
  int m_lo = 1 << 20, m_hi = -(1 << 20);
  for (const auto& s : states) {
    l_max = std::max(l_max, s.qn.l);
    n_max = std::max(n_max, s.qn.n);
    m_lo = std::min(m_lo, s.qn.m.twice());
    m_hi = std::max(m_hi, s.qn.m.twice());
  }
  m_span = (m_hi - m_lo) / 2;
  const QuadratureGrid grid = resolve(options, l_max);
  grid.check_sufficient(n_max, l_max, m_span, v);

  auto run = [&](const QuadratureGrid& g) {
    const Nodes nodes = make_nodes(g);
    std::vector<SampledSpinor> sampled;
    sampled.reserve(states.size());
    for (const auto& s : states) sampled.push_back(sample(s, nodes));
    std::vector<std::vector<cplx>> out(states.size(), std::vector<cplx>(states.size()));
    for (auto [i, k] : pairs) out[i][k] = integrate(sampled[i], sampled[k], v, nodes);
    return out;
  };

  Assembly result;
  result.values = run(grid);
  if (options.certify) {
    const auto fine = run(grid.refined());
    for (auto [i, k] : pairs) {
      const double change = std::abs(fine[i][k] - result.values[i][k]);
      result.max_change = std::max(result.max_change, change);
      if (!within(change, fine[i][k], options.tolerance)) {
        throw ConvergenceError("oracle quadrature not converged for " +
                               element_label(states[i], states[k], v));
      }
    }
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = 0; k < count; ++k) pairs.emplace_back(i, k);
  return pairs;
}

void record(SelectionReport& report, double magnitude, double threshold, std::string label) {
  ++report.checked;
  if (magnitude >= report.max_abs) {
    report.max_abs = magnitude;
    report.worst = label;
  }
  if (!(magnitude < threshold)) {
    report.passed = false;
    std::ostringstream os;
    os.precision(3);
    os << label << " = " << magnitude;
    report.violations.push_back(os.str());
  }
}

}  // namespace

QuadratureGrid QuadratureGrid::for_max_l(int l_max) {
  return {64, static_cast<std::size_t>(2 * (2 * l_max + 3)), 32};
}

void QuadratureGrid::check_sufficient(int n_max, int l_max, int max_m_difference,
                                      const PotentialSpec& v) const {
  // Gauss rules of order N are exact through degree 2N - 1.
  const int radial_degree = 2 * (n_max - 1) + 2 + max_r_power(v);
  if (2 * static_cast<int>(radial) - 1 < radial_degree) {
    throw std::invalid_argument("quadrature grid: too few radial nodes");
  }
  if (static_cast<int>(polar) < 2 * l_max + max_cos_power(v)) {
    throw std::invalid_argument("quadrature grid: too few polar nodes");
  }
  if (static_cast<int>(azimuthal) <= 2 * max_m_difference) {
    throw std::invalid_argument("quadrature grid: too few azimuthal nodes");
  }
}

std::complex<double> matrix_element_on(const CoupledSpinor& bra, const CoupledSpinor& ket,
                                       const PotentialSpec& v, const QuadratureGrid& grid) {
  const Nodes nodes = make_nodes(grid);
  return integrate(sample(bra, nodes), sample(ket, nodes), v, nodes);
}

ElementResult matrix_element(const CoupledSpinor& bra, const CoupledSpinor& ket,
                             const PotentialSpec& v, const OracleOptions& options) {
  const std::vector<CoupledSpinor> states{bra, ket};
  const auto assembly = assemble(states, v, options, {{0, 1}});
  return {assembly.values[0][1], assembly.max_change};
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::vector<std::complex<double>>>& h) {
  if (h.size() == 1) return {h[0][0].real()};
  if (h.size() != 2) throw std::invalid_argument("hermitian_eigenvalues: only 1x1 and 2x2 blocks");
  const double a = h[0][0].real();
  const double d = h[1][1].real();
  // Average the two off-diagonal estimates; quadrature makes them conjugate only to rounding.
  const cplx off = 0.5 * (h[0][1] + std::conj(h[1][0]));
  const double radius = std::hypot(0.5 * (a - d), std::abs(off));
  const double centre = 0.5 * (a + d);
  return {centre + radius, centre - radius};
}

SubspaceResult degenerate_subspace_shifts(int n, HalfInt j, HalfInt m, int Z,
                                          const PotentialSpec& v, const OracleOptions& options) {
  SubspaceResult result;
  result.states = degenerate_subspace(n, j, m, Z);
  const auto assembly = assemble(result.states, v, options, all_pairs(result.states.size()));
  result.matrix = assembly.values;
  result.max_refinement_change = assembly.max_change;
  result.eigenvalues = hermitian_eigenvalues(result.matrix);
  return result;
}

SelectionReport m_conservation_check(int n, HalfInt j, int Z, const PotentialSpec& v,
                                     double threshold, const OracleOptions& options) {
  std::vector<CoupledSpinor> level;
  for (int twice_m = -j.twice(); twice_m <= j.twice(); twice_m += 2) {
    for (auto& s : degenerate_subspace(n, j, HalfInt::from_twice(twice_m), Z)) level.push_back(s);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t k = 0; k < level.size(); ++k)
      if (level[i].qn.m != level[k].qn.m) pairs.emplace_back(i, k);

  const auto assembly = assemble(level, v, options, pairs);
  SelectionReport report;
  for (auto [i, k] : pairs) {
    record(report, std::abs(assembly.values[i][k]), threshold, element_label(level[i], level[k], v));
  }
  return report;
}

SelectionReport parity_check(int n, HalfInt j, HalfInt m, int Z, const PotentialSpec& v,
                             double threshold, const OracleOptions& options) {
  SelectionReport report;
  const Parity p = parity(v);
  if (p == Parity::Mixed) return report;
  const int potential_sign = p == Parity::Even ? 1 : -1;
  const auto states = degenerate_subspace(n, j, m, Z);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t k = 0; k < states.size(); ++k)
      if (states[i].parity() * states[k].parity() * potential_sign < 0) pairs.emplace_back(i, k);
  if (pairs.empty()) return report;
  const auto assembly = assemble(states, v, options, pairs);
  for (auto [i, k] : pairs) {
    record(report, std::abs(assembly.values[i][k]), threshold, element_label(states[i], states[k], v));
  }
  return report;
}

}  // namespace hyshift::oracle
