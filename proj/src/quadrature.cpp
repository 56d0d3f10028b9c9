#include "hyshift/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hyshift::quadrature {

namespace {

using real = long double;

// L_n(z) and L_{n-1}(z) by the three-term recurrence.
std::pair<real, real> laguerre_pair(int n, real z) {
  real p1 = 1, p2 = 0;
  for (int k = 1; k <= n; ++k) {
    const real p3 = p2;
    p2 = p1;
    p1 = ((2 * k - 1 - z) * p2 - (k - 1) * p3) / k;
  }
  return {p1, p2};
}

// Golub-Welsch eigenvalues of the Jacobi matrix as starting points, then
// Newton polishing in long double: L_n(x) near the largest node of a
// high-order rule overflows binary64.
Rule build_laguerre(std::size_t order) {
  const int n = static_cast<int>(order);
  Eigen::VectorXd diagonal(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diagonal[k] = 2.0 * k + 1.0;
  for (int k = 0; k + 1 < n; ++k) off[k] = k + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: eigen solve failed");

  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < n; ++i) {
    real z = solver.eigenvalues()[i];
    for (int iter = 0; iter < 50; ++iter) {
      const auto [pn, pn1] = laguerre_pair(n, z);
      const real derivative = n * (pn - pn1) / z;
      const real step = pn / derivative;
      z -= step;
      if (std::fabs(step) <= 1e-18L * z) break;
    }
    const auto [pn, pn1] = laguerre_pair(n, z);
    const real derivative = n * (pn - pn1) / z;
    // w_i = 1 / (x_i [L_n'(x_i)]^2)
    rule.nodes[i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(1.0L / (z * derivative * derivative));
  }
  return rule;
}

Rule build_legendre(std::size_t order) {
  const int n = static_cast<int>(order);
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    real z = std::cos(std::numbers::pi_v<real> * (i + 0.75L) / (n + 0.5L));
    real derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      real p1 = 1, p2 = 0;
      for (int k = 1; k <= n; ++k) {
        const real p3 = p2;
        p2 = p1;
        p1 = ((2 * k - 1) * z * p2 - (k - 1) * p3) / k;
      }
      derivative = n * (z * p1 - p2) / (z * z - 1);
      const real step = p1 / derivative;
      z -= step;
      if (std::fabs(step) <= 1e-19L) break;
    }
    real p1 = 1, p2 = 0;
    for (int k = 1; k <= n; ++k) {
      const real p3 = p2;
      p2 = p1;
      p1 = ((2 * k - 1) * z * p2 - (k - 1) * p3) / k;
    }
    derivative = n * (z * p1 - p2) / (z * z - 1);
    const real w = 2 / ((1 - z * z) * derivative * derivative);
    rule.nodes[i] = static_cast<double>(-z);
    rule.nodes[n - 1 - i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(w);
    rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

template <Rule (*Build)(std::size_t)>
const Rule& cached(std::size_t order) {
  if (order == 0) throw std::invalid_argument("quadrature order must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const Rule>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[order];
  if (!slot) slot = std::make_unique<const Rule>(Build(order));
  return *slot;
}

}  // namespace

const Rule& gauss_laguerre(std::size_t order) { return cached<build_laguerre>(order); }

const Rule& gauss_legendre(std::size_t order) { return cached<build_legendre>(order); }

Rule periodic_trapezoid(std::size_t order) {
  if (order == 0) throw std::invalid_argument("quadrature order must be positive");
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.assign(order, 2.0 * std::numbers::pi / static_cast<double>(order));
  for (std::size_t k = 0; k < order; ++k) {
    rule.nodes[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
  }
  return rule;
}

}  // namespace hyshift::quadrature
