#include "hyshift/regime.hpp"

#include "hyshift/perturb.hpp"

#include <cmath>
#include <stdexcept>

namespace hyshift::perturb {

RegimeReport regime_check(double pressure_pa, double temperature_k, int n) {
  if (!(pressure_pa > 0) || !std::isfinite(pressure_pa)) {
    throw std::invalid_argument("regime_check: pressure must be > 0");
  }
  if (!(temperature_k > 0) || !std::isfinite(temperature_k)) {
    throw std::invalid_argument("regime_check: temperature must be > 0");
  }
  if (n < 1) throw std::invalid_argument("regime_check: n must be >= 1");

  RegimeReport r;
  r.pressure_pa = pressure_pa;
  r.temperature_k = temperature_k;
  r.n = n;
  r.density_ratio = (kNormalPressure / pressure_pa) * (temperature_k / kNormalTemperature);
  r.volume_per_atom_nm3 = kBoltzmann * temperature_k / pressure_pa * 1e27;
  r.distance_a0 = std::cbrt(r.volume_per_atom_nm3) / kBohrRadiusNm;
  r.wall_scale = std::pow(0.5 / r.distance_a0, 3);
  const double n3 = std::pow(n, 3);
  r.wall_shift_scale = r.wall_scale * n3 * n;
  r.fine_structure_scale = kAlphaSquared;
  r.fine_structure_level = kAlphaSquared / n3;
  r.lamb_s_scale = 1e-6 / n3;
  r.lamb_other_scale = 1e-9 / n3;
  r.hyperfine_scale = kAlphaSquared * kElectronProtonMassRatio;

  r.atomic_gas = r.density_ratio > kDominanceMargin;
  r.fine_structure_dominates = r.fine_structure_level > kDominanceMargin * r.wall_shift_scale;
  r.hyperfine_negligible = r.wall_scale > kDominanceMargin * r.hyperfine_scale;
  r.coupled_basis_applies = r.fine_structure_dominates && r.hyperfine_negligible;

  // alpha^2 / k^3 > margin * wall * k^4  <=>  k^7 < alpha^2 / (margin * wall)
  const double limit = kAlphaSquared / (kDominanceMargin * r.wall_scale);
  int k = 0;
  while (std::pow(k + 1, 7) < limit && k < 1000) ++k;
  r.breakdown_n = k;
  return r;
}

}  // namespace hyshift::perturb
