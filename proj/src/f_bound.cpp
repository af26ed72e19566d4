#include "greenbound/f_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "greenbound/errors.hpp"

namespace greenbound {

double f_sup_bound_interior(double a, std::int64_t N) {
  if (!(a > 1.0)) throw DomainError("f_sup_bound_interior requires a > 1");
  if (N < 1) throw DomainError("point count bound must be >= 1");
  const double l = std::log((a + 1.0) / 2.0);
  return (a - 1.0) * static_cast<double>(N) / (8.0 * std::numbers::pi * l * l);
}

double f_cusp_extension_factor(double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  if (eps <= two_pi) return 1.0;
  const double f = eps / two_pi * std::exp(two_pi / eps - 1.0);
  return f * f;
}

double f_cusp_extension_factor_coarse(double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const double r = eps / (2.0 * std::numbers::pi);
  return std::max(1.0, r * r);
}

double f_sup_bound_X(double sup_Y, int level, double eps_unit) {
  if (!(sup_Y >= 0.0) || level < 1 || !(eps_unit > 0.0))
    throw DomainError("f_sup_bound_X requires sup_Y >= 0, level >= 1, eps > 0");
  return f_cusp_extension_factor_coarse(level * eps_unit) * sup_Y;
}

double zeta_bound(double sup_X, int genus) {
  if (genus < 1) throw DomainError("positive genus required");
  if (!(sup_X >= 0.0)) throw DomainError("sup_X must be non-negative");
  return sup_X / genus;
}

FBoundResult f_bounds(double a, std::int64_t N, int level, double eps_unit, int genus) {
  FBoundResult r;
  r.a = a;
  r.N_used = N;
  r.sup_Y = f_sup_bound_interior(a, N);
  r.sup_X = f_sup_bound_X(r.sup_Y, level, eps_unit);
  r.zeta = zeta_bound(r.sup_X, genus);
  return r;
}

}  // namespace greenbound
