#include "hyshift/radial.hpp"

#include "hyshift/quadrature.hpp"

#include <cmath>
#include <string>

namespace hyshift::radial {

namespace {

// sqrt((2Z/n)^3 (n-l-1)! / (2n (n+l)!))
long double normalization(const RadialState& s) {
  long double ratio = 1;
  for (int k = s.n - s.l; k <= s.n + s.l; ++k) ratio /= k;
  const long double scale = 2.0L * s.Z / s.n;
  return std::sqrt(scale * scale * scale * ratio / (2.0L * s.n));
}

}  // namespace

void validate(const RadialState& state) {
  if (state.n < 1) throw std::invalid_argument("radial state: n must be >= 1");
  if (state.l < 0 || state.l >= state.n) {
    throw std::invalid_argument("radial state: need 0 <= l < n, got n=" +
                                std::to_string(state.n) + " l=" + std::to_string(state.l));
  }
  if (state.Z < 1) throw std::invalid_argument("radial state: Z must be >= 1");
}

double laguerre(int degree, int alpha, double x) {
  if (degree < 0) throw std::invalid_argument("laguerre: negative degree");
  long double prev = 1;
  if (degree == 0) return 1.0;
  long double curr = 1.0L + alpha - x;
  for (int k = 1; k < degree; ++k) {
    const long double next = ((2 * k + 1 + alpha - x) * curr - (k + alpha) * prev) / (k + 1);
    prev = curr;
    curr = next;
  }
  return static_cast<double>(curr);
}

double radial_polynomial_part(const RadialState& state, double r) {
  validate(state);
  if (r < 0) throw std::invalid_argument("radial function: r must be >= 0");
  const double rho = 2.0 * state.Z * r / state.n;
  const long double lag = laguerre(state.n - state.l - 1, 2 * state.l + 1, rho);
  return static_cast<double>(normalization(state) * std::pow(static_cast<long double>(rho), state.l) * lag);
}

double radial_wavefunction(const RadialState& state, double r) {
  return radial_polynomial_part(state, r) * std::exp(-static_cast<double>(state.Z) * r / state.n);
}

Rational r2_expectation(int n, int l, int Z) {
  validate({n, l, Z});
  return Rational(BigInt(n) * n * (5 * n * n + 1 - 3 * l * (l + 1)), BigInt(2) * Z * Z);
}

double radial_overlap_quadrature(const RadialState& a, const RadialState& b, int k,
                                 const QuadratureOptions& options) {
  validate(a);
  validate(b);
  if (k < -2) throw std::invalid_argument("radial moment: k must be >= -2");
  if (options.initial_nodes == 0 || options.max_nodes < options.initial_nodes) {
    throw std::invalid_argument("radial moment: bad node limits");
  }
  const long double s = static_cast<long double>(a.Z) / a.n + static_cast<long double>(b.Z) / b.n;

  auto integrate = [&](std::size_t order) {
    const auto& rule = quadrature::gauss_laguerre(order);
    long double sum = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double r = static_cast<double>(rule.nodes[i] / s);
      sum += static_cast<long double>(rule.weights[i]) * radial_polynomial_part(a, r) *
             radial_polynomial_part(b, r) * std::pow(static_cast<long double>(r), 2 + k);
    }
    return static_cast<double>(sum / s);
  };

  std::size_t order = options.initial_nodes;
  double coarse = integrate(order);
  while (2 * order <= options.max_nodes) {
    order *= 2;
    const double fine = integrate(order);
    if (std::fabs(fine - coarse) <= options.tolerance * std::fmax(1.0, std::fabs(fine))) {
      return fine;
    }
    coarse = fine;
  }
  throw ConvergenceError("radial quadrature did not converge for n=" + std::to_string(a.n) +
                         " l=" + std::to_string(a.l) + " k=" + std::to_string(k));
}

double radial_moment_quadrature(const RadialState& state, int k, const QuadratureOptions& options) {
  return radial_overlap_quadrature(state, state, k, options);
}

}  // namespace hyshift::radial
