#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greenbound/hyperbolic.hpp"

namespace greenbound {

enum class Family { full, gamma0, gamma1, principal };

std::string_view to_string(Family f);
/// Parses "full", "gamma0", "gamma1", "principal"; throws DomainError otherwise.
Family parse_family(std::string_view name);

/// A congruence subgroup of SL2(Z): SL2(Z) itself, Gamma0(n), Gamma1(n) or Gamma(n).
struct GroupSpec {
  Family family = Family::full;
  int level = 1;

  static GroupSpec make(Family family, int level);
  static GroupSpec full() { return {Family::full, 1}; }
  static GroupSpec gamma0(int n) { return make(Family::gamma0, n); }
  static GroupSpec gamma1(int n) { return make(Family::gamma1, n); }
  static GroupSpec principal(int n) { return make(Family::principal, n); }

  /// Level used for congruence conditions (1 for the full group).
  int effective_level() const { return family == Family::full ? 1 : level; }
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Membership test; throws DomainError unless det m == 1.
bool contains(const GroupSpec& spec, const IntMatrix& m);
bool contains_minus_one(const GroupSpec& spec);
/// #(Gamma ∩ {±1}), either 1 or 2.
int minus_one_count(const GroupSpec& spec);

std::int64_t index_in_sl2z(const GroupSpec& spec);
/// Index of the image of the group in PSL2(Z).
std::int64_t index_in_psl2z(const GroupSpec& spec);

struct SignatureCounts {
  std::int64_t psl_index = 1;  // mu
  std::int64_t nu2 = 0;        // elliptic points of order 2
  std::int64_t nu3 = 0;        // elliptic points of order 3
  std::int64_t cusps = 1;      // nu_infinity
};

/// Classical closed formulas for mu, nu2, nu3 and the number of cusps.
SignatureCounts signature_counts(const GroupSpec& spec);

/// Hyperbolic volume in the stack convention: (pi/3) [PSL2(Z) : image] / #(Gamma ∩ {±1}).
double volume(const GroupSpec& spec);

/// g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2.
int genus(const GroupSpec& spec);

/// Cusp representative num/den in lowest terms; den == 0 encodes infinity.
struct CuspRepresentative {
  std::int64_t num = 1;
  std::int64_t den = 0;

  bool is_infinity() const { return den == 0; }
  std::string to_string() const;
  friend bool operator==(const CuspRepresentative&, const CuspRepresentative&) = default;
};

struct CuspData {
  CuspRepresentative representative;
  int width = 1;
  /// sigma_c = g * diag(sqrt(width), 1/sqrt(width)) with g in SL2(Z), g(oo) = representative.
  Moebius scaling;
  /// The integer part g of the scaling matrix.
  IntMatrix base;
};

/// Complete cusp list; only the full group and Gamma0(n) are supported (UnsupportedFamily otherwise).
std::vector<CuspData> cusps(const GroupSpec& spec);

/// Multiset of cusp widths, available for every family. Sorted ascending.
std::vector<int> cusp_widths(const GroupSpec& spec);

struct CuspCoordinates {
  std::complex<double> q;
  double y = 0.0;
};

/// q_c(z) = exp(2 pi i sigma_c^{-1} z), y_c(z) = Im sigma_c^{-1} z.
CuspCoordinates cusp_coordinates(UhpPoint z, const CuspData& cusp);

/// Certified lower bound m_c for the minimum of C_c(gamma) over gamma outside Gamma_c.
double min_c_lower_bound(const GroupSpec& spec, const CuspData& cusp);

/// (delta + sqrt(delta^2 - 1))^{-3/2} and ^{-1/2}; delta > 1.
double eps_unit(double delta);
double eps_prime_unit(double delta);

struct CuspEpsilons {
  int width = 1;
  double eps = 0.0;
  double eps_prime = 0.0;
};

/// eps_c = m_c eps, eps'_c = m_c eps' for every cusp (from cusp_widths, so all families work).
/// Verifies both admissibility inequalities; throws DomainError for delta <= 1.
std::vector<CuspEpsilons> admissible_epsilons(const GroupSpec& spec, double delta);

}  // namespace greenbound

namespace greenbound {

/// Numerical check that the discs D_c(eps'_c) are pairwise disjoint in Gamma\H:
/// samples points of each disc and searches every other cusp's disc for a translate.
/// Full group and Gamma0(n) only.
bool spot_check_disjoint_discs(const GroupSpec& spec, double delta, int samples_per_cusp = 16);

}  // namespace greenbound
