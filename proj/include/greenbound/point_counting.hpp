#pragma once

#include <cstdint>
#include <vector>

#include "greenbound/hyperbolic.hpp"
#include "greenbound/modular_group.hpp"

namespace greenbound {

/// All gamma in the group with u(z, gamma w) <= b (up to kThresholdTol), by bounded
/// enumeration over bottom rows (c, d) and the translation parameter of the top row.
/// Requires b >= 1.
std::vector<IntMatrix> enumerate_translates(const GroupSpec& spec, UhpPoint z, UhpPoint w,
                                            double b);

/// N_Gamma(z, b) as an explicit element list; both ±gamma appear when -1 is in the group.
std::vector<IntMatrix> enumerate_orbit_elements(const GroupSpec& spec, UhpPoint z, double b);

std::int64_t count_orbit(const GroupSpec& spec, UhpPoint z, double b);

/// Bound on |entries| of any gamma in SL2(R) with u(z, gamma w) <= b.
/// Uses u(i, M i) = |M|_F^2 / 2 after conjugating z and w to i.
double bruteforce_entry_bound(UhpPoint z, UhpPoint w, double b);

/// Exhaustive scan over integer matrices with entries in [-M, M].
/// Throws EntryBoundTooSmall if bruteforce_entry_bound exceeds M.
std::vector<IntMatrix> enumerate_translates_bruteforce(const GroupSpec& spec, UhpPoint z,
                                                       UhpPoint w, double b, int M);

std::int64_t count_orbit_bruteforce(const GroupSpec& spec, UhpPoint z, double b, int M);

struct CountCertificate {
  double threshold = 0.0;
  double grid_step = 0.0;
  std::int64_t certified_sup = 0;  // >= sup over Y0 of N_SL2(Z)(z, threshold)
  std::int64_t max_sample = 0;     // max of the plain count at cell centres
  std::int64_t cells = 0;

  friend bool operator==(const CountCertificate&, const CountCertificate&) = default;
};

/// The strip {|x| <= 1/2, sqrt(3)/2 <= y <= 1/eps} with eps = eps_unit(2).
struct StripY0 {
  double x_min = -0.5;
  double x_max = 0.5;
  double y_min;
  double y_max;

  static StripY0 standard();
};

/// Hyperbolic radius bound of the square cell of side h centred at height y0.
double cell_radius(double y0, double h);

/// Certified supremum of N_SL2(Z)(z, b) over Y0 on a grid of side h in (0, 0.05].
/// Each cell centre is counted at the threshold cosh(arcosh b + 2 rho); cells are
/// distributed over `threads` workers (0 = hardware concurrency).
CountCertificate sup_count_Y0(double b, double h, unsigned threads = 0);

}  // namespace greenbound
