#pragma once

#include <string>
#include <variant>
#include <vector>

namespace hyshift::oracle {

struct Linear { double lambda = 1.0; };            // lambda z, Ry/a0
struct Quadratic { double lambda = 1.0; };         // lambda z^2, Ry/a0^2
struct DisplacedQuadratic {                        // lambda (z - z0)^2
  double lambda = 1.0;
  double z0 = 0.0;
};
struct GeneralizedVdW {                            // gamma (x^2 + y^2 + beta^2 z^2)
  double gamma = 1.0;
  double beta = 1.0;
};
struct LennardJones { double d = 10.0; };          // -(e^2/16 d^3)(x^2 + y^2 + 2 z^2)
struct Constant { double c = 1.0; };

using PotentialSpec =
    std::variant<Linear, Quadratic, DisplacedQuadratic, GeneralizedVdW, LennardJones, Constant>;

/// e^2 in Ry*a0 used for the wall potential. The atom-wall closed form is
/// normalized so that the 1s shift is -(a0/d)^3 Ry, which fixes e^2 = 4.
inline constexpr double kWallChargeSquared = 4.0;

/// One term coefficient * r^r_power * cos(theta)^cos_power.
struct PolynomialTerm {
  double coefficient = 0.0;
  int r_power = 0;
  int cos_power = 0;
};

enum class Parity { Even, Odd, Mixed };

/// Polynomial in (r, cos theta); every PotentialSpec is azimuthally symmetric.
std::vector<PolynomialTerm> expand(const PotentialSpec& v);

double evaluate_expansion(const std::vector<PolynomialTerm>& terms, double r, double cos_theta);

/// V at a Cartesian point (lengths in a0), straight from the defining form.
double evaluate_cartesian(const PotentialSpec& v, double x, double y, double z);

Parity parity(const PotentialSpec& v);
int max_r_power(const PotentialSpec& v);
int max_cos_power(const PotentialSpec& v);

/// "quadratic", "dq", ...
std::string name(const PotentialSpec& v);

}  // namespace hyshift::oracle
