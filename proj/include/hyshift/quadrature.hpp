#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyshift {

/// Thrown when refining a quadrature keeps changing its result.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyshift

namespace hyshift::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Laguerre rule for weight e^{-x} on [0, inf). Tables are built once
/// per order and shared; the returned reference stays valid for the program.
const Rule& gauss_laguerre(std::size_t order);

/// Gauss-Legendre rule on [-1, 1], cached like gauss_laguerre.
const Rule& gauss_legendre(std::size_t order);

/// Uniform trapezoid on [0, 2 pi); exact for e^{ik phi} with |k| < order.
Rule periodic_trapezoid(std::size_t order);

}  // namespace hyshift::quadrature
