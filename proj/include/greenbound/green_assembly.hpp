#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greenbound/f_bound.hpp"
#include "greenbound/modular_group.hpp"
#include "greenbound/point_counting.hpp"

namespace greenbound {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  /// Throws DomainError if lo > hi or either end is NaN.
  static Interval make(double lo, double hi);
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Round to `digits` significant figures toward +inf / -inf.
double round_up_sig(double v, int digits = 3);
double round_down_sig(double v, int digits = 3);

/// Per-cusp inputs of the bound theorem.
struct CuspParams {
  std::string label;
  int width = 1;
  double eps = 0.0;
  double eps_prime = 0.0;
  /// Lower bound for min C_c(gamma) over gamma outside Gamma_c.
  double min_c = 1.0;

  friend bool operator==(const CuspParams&, const CuspParams&) = default;
};

/// Hypotheses of the canonical Green function bound theorem.
struct BoundParams {
  double delta = 2.0;
  double eta = 0.25;
  double A = 0.0;
  double B = 0.0;
  double C = 1.0;
  double sup_F_Y = 0.0;
  double sup_F_X = 0.0;
  int genus = 1;
  double volume = 1.0;
  double zeta = 0.0;
  int minus_one_count = 2;
  std::vector<CuspParams> cusps;

  /// Checks every hypothesis (delta > 1, eta in (0, 1/4], A <= B, C > 0, eps_c < eps'_c,
  /// both admissibility inequalities per cusp, ...). Throws DomainError.
  void validate() const;

  friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

struct CuspReport {
  std::string label;
  int width = 1;
  double eps = 0.0;
  double eps_prime = 0.0;
  double T_eps = 0.0;
  double T_eps_prime = 0.0;
  double tilde_A = 0.0;
  double tilde_B = 0.0;
  /// One point in D_c(eps_c), the other in Y outside D_c(eps'_c).
  Interval regime_b;
  /// Both points in D_c(eps'_c); bounds gr^can - m(1/2pi) log|q_c(z) - q_c(w)|.
  Interval regime_d;
  /// Upper bound for gr^can itself on D_c(eps'_c) x D_c(eps'_c).
  double regime_d_sup = 0.0;

  friend bool operator==(const CuspReport&, const CuspReport&) = default;
};

/// c0 + c1 n + c2 n^2.
struct SupPolynomial {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double n) const { return c0 + (c1 + c2 * n) * n; }
  friend bool operator==(const SupPolynomial&, const SupPolynomial&) = default;
};

struct BoundReport {
  double S = 0.0;
  double r_delta = 0.0;
  double zeta_over_eta = 0.0;
  Interval int_h;
  /// Both points in Y; bounds gr^can plus the singular sum.
  Interval regime_a;
  Interval regime_b;
  Interval regime_c;
  Interval regime_d;
  std::vector<CuspReport> cusps;
  /// Upper bound for gr^can over X x X: max over all four regimes.
  double sup_bound = 0.0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Kim-Sarnak spectral gap 975/4096.
constexpr double kim_sarnak_eta() { return 975.0 / 4096.0; }

/// pi / (2pi - 4)^2 * sup_N17, the constant C bounding Phi_Gamma(z, lambda) / lambda.
double c_from_pointcount(std::int64_t sup_N17);

double spectral_constant_S(double eta, double C, double zeta);
/// Same quantity via exp of a sum of logs.
double spectral_constant_S_logsum(double eta, double C, double zeta);

/// (sup_F_Y / g) (eps / 4pi)^2.
double cusp_term_T(double sup_F_Y, int genus, double eps);

/// (1/24pi) (sqrt(2/(delta-1)) + arctan sqrt((delta-1)/2)).
double r_delta(double delta);

struct TildeConstants {
  double tilde_A = 0.0;
  double tilde_B = 0.0;
};

TildeConstants tilde_constants(double A, double B, int minus_one_count, double eps_prime_c,
                               double delta);

/// [-zeta/eta, 0], the range of ∫ h_Gamma mu^can.
Interval int_h_interval(double zeta, double eta);

struct CuspEnvelope {
  double h_minus = 0.0;
  double h_plus = 0.0;
};

/// Sub/superharmonic envelopes of h_Gamma on a cusp disc from its boundary values.
/// Requires y_c >= 1/eps.
CuspEnvelope cusp_envelope_h(double boundary_sup, double boundary_inf, double sup_F_boundary,
                             int genus, double volume, double eps, double y_c);

/// Upper bound for (m/2pi) log|q_c(z) - q_c(w)| when both points lie in D_c(eps'):
/// |q| < exp(-2pi/eps') on the disc.
double q_term_sup(int minus_one_count, double eps_prime_c);

BoundReport regime_bounds(const BoundParams& params);

/// Quadratic in the level n dominating every regime upper bound, uniformly over
/// congruence subgroups of level n, when eps_c = m_c eps, eps'_c = m_c eps' with
/// m_c <= n and zeta <= max{1, (n eps / 2pi)^2} sup_F_Y / g (here g = params.genus).
/// Uses the worst case #(Gamma ∩ {±1}) = 2.
SupPolynomial global_sup_bound(const BoundParams& params);

enum class ConstantsMode { paper, computed };

struct PipelineOptions {
  ConstantsMode mode = ConstantsMode::paper;
  double delta = 2.0;
  double a = 1.44;
  double A = -3.00e4;
  double B = 1.58e4;
  double grid_step = 0.01;
  unsigned threads = 0;
  /// Divide zeta and T by the actual genus instead of using g >= 1.
  bool use_genus = false;
  /// Pre-computed certificates (computed mode); computed on demand when absent.
  std::optional<CountCertificate> count17;
  std::optional<CountCertificate> count_small;
};

inline constexpr std::int64_t kPaperSupN17 = 226;
inline constexpr std::int64_t kPaperSupNSmall = 58;

struct PipelineResult {
  GroupSpec spec;
  ConstantsMode mode = ConstantsMode::paper;
  int genus = 0;
  int genus_used = 1;
  double volume = 0.0;
  double eps = 0.0;
  double eps_prime = 0.0;
  double small_threshold = 0.0;  // 2a^2 - 1
  std::int64_t sup_N17 = 0;
  std::int64_t sup_N_small = 0;
  std::optional<CountCertificate> count17;
  std::optional<CountCertificate> count_small;
  double C_raw = 0.0;
  FBoundResult f;
  double sup_F_Y_raw = 0.0;
  /// zeta bound with g = 1 and with the actual genus.
  double zeta_coarse = 0.0;
  double zeta_genus = 0.0;
  BoundParams params;
  BoundReport report;
  SupPolynomial polynomial;
};

/// Worked example for congruence subgroups: delta = 2, eta = 975/4096, a = 1.44,
/// eps_c = m_c eps. C and sup_Y F are rounded up to 3 significant figures before use.
/// Throws GenusZero when genus(spec) == 0.
PipelineResult example_pipeline(const GroupSpec& spec, const PipelineOptions& options = {});

}  // namespace greenbound
