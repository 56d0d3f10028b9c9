#include "hyshift/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyshift::oracle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double wall_coupling(double d) {
  if (!(d > 0)) throw std::invalid_argument("LennardJones potential: d must be > 0");
  return -kWallChargeSquared / (16.0 * d * d * d);
}

}  // namespace

std::vector<PolynomialTerm> expand(const PotentialSpec& v) {
  return std::visit(
      overloaded{
          [](const Linear& p) { return std::vector<PolynomialTerm>{{p.lambda, 1, 1}}; },
          [](const Quadratic& p) { return std::vector<PolynomialTerm>{{p.lambda, 2, 2}}; },
          [](const DisplacedQuadratic& p) {
            return std::vector<PolynomialTerm>{
                {p.lambda, 2, 2}, {-2.0 * p.lambda * p.z0, 1, 1}, {p.lambda * p.z0 * p.z0, 0, 0}};
          },
          // x^2 + y^2 = r^2 (1 - cos^2)
          [](const GeneralizedVdW& p) {
            return std::vector<PolynomialTerm>{{p.gamma, 2, 0},
                                               {p.gamma * (p.beta * p.beta - 1.0), 2, 2}};
          },
          [](const LennardJones& p) {
            const double g = wall_coupling(p.d);
            return std::vector<PolynomialTerm>{{g, 2, 0}, {g, 2, 2}};
          },
          [](const Constant& p) { return std::vector<PolynomialTerm>{{p.c, 0, 0}}; },
      },
      v);
}

double evaluate_expansion(const std::vector<PolynomialTerm>& terms, double r, double cos_theta) {
  double sum = 0.0;
  for (const auto& t : terms) {
    sum += t.coefficient * std::pow(r, t.r_power) * std::pow(cos_theta, t.cos_power);
  }
  return sum;
}

double evaluate_cartesian(const PotentialSpec& v, double x, double y, double z) {
  return std::visit(
      overloaded{
          [&](const Linear& p) { return p.lambda * z; },
          [&](const Quadratic& p) { return p.lambda * z * z; },
          [&](const DisplacedQuadratic& p) { return p.lambda * (z - p.z0) * (z - p.z0); },
          [&](const GeneralizedVdW& p) {
            return p.gamma * (x * x + y * y + p.beta * p.beta * z * z);
          },
          [&](const LennardJones& p) { return wall_coupling(p.d) * (x * x + y * y + 2.0 * z * z); },
          [&](const Constant& p) { return p.c; },
      },
      v);
}

Parity parity(const PotentialSpec& v) {
  if (std::holds_alternative<Linear>(v)) return Parity::Odd;
  if (const auto* dq = std::get_if<DisplacedQuadratic>(&v); dq && dq->z0 != 0.0) {
    return Parity::Mixed;
  }
  return Parity::Even;
}

int max_r_power(const PotentialSpec& v) {
  int out = 0;
  for (const auto& t : expand(v)) out = std::max(out, t.r_power);
  return out;
}

int max_cos_power(const PotentialSpec& v) {
  int out = 0;
  for (const auto& t : expand(v)) out = std::max(out, t.cos_power);
  return out;
}

std::string name(const PotentialSpec& v) {
  return std::visit(overloaded{
                        [](const Linear&) { return std::string("linear"); },
                        [](const Quadratic&) { return std::string("quadratic"); },
                        [](const DisplacedQuadratic&) { return std::string("dq"); },
                        [](const GeneralizedVdW&) { return std::string("vdw"); },
                        [](const LennardJones&) { return std::string("lj"); },
                        [](const Constant&) { return std::string("constant"); },
                    },
                    v);
}

}  // namespace hyshift::oracle
