#pragma once

#include <cstdint>

namespace greenbound {

/// Bounds on F_Gamma (the density of the canonical (1,1)-form against mu_hyp, times g).
struct FBoundResult {
  double a = 0.0;
  std::int64_t N_used = 0;
  double sup_Y = 0.0;
  double sup_X = 0.0;
  double zeta = 0.0;

  friend bool operator==(const FBoundResult&, const FBoundResult&) = default;
};

/// (a-1) N / (8 pi log((a+1)/2)^2): sup of F_Gamma where N bounds N_Gamma(z, 2a^2-1).
double f_sup_bound_interior(double a, std::int64_t N);

/// Factor bounding F on a cusp disc D_c(eps) by its sup on the boundary:
/// 1 for eps <= 2 pi, ((eps/2pi) exp(2pi/eps - 1))^2 otherwise.
double f_cusp_extension_factor(double eps);

/// max{1, (eps/2pi)^2}, the coarse version of f_cusp_extension_factor.
double f_cusp_extension_factor_coarse(double eps);

/// max{1, (n eps_unit / 2pi)^2} sup_Y, using that every cusp width is at most the level n.
double f_sup_bound_X(double sup_Y, int level, double eps_unit);

/// sup_X / g, an upper bound for zeta_Gamma. Throws DomainError for g == 0.
double zeta_bound(double sup_X, int genus);

/// Full chain for given a, point-count bound N, level and eps_unit.
FBoundResult f_bounds(double a, std::int64_t N, int level, double eps_unit, int genus);

}  // namespace greenbound
