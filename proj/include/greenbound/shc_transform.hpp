#pragma once

#include <vector>

namespace greenbound {

/// Compactly supported radial profile theta on [1, U].
class RadialKernel {
 public:
  enum class Kind { indicator, sampled };

  /// theta = 1 on [1, a], 0 beyond; a > 1.
  static RadialKernel indicator(double a);
  /// Piecewise-linear through (knots[i], values[i]), zero outside [knots.front(), knots.back()].
  /// Knots must be strictly increasing and start at >= 1.
  static RadialKernel sampled(std::vector<double> knots, std::vector<double> values);

  Kind kind() const { return kind_; }
  double support_end() const { return knots_.back(); }
  double operator()(double u) const;
  /// Points where theta may fail to be smooth, including both support ends.
  const std::vector<double>& breakpoints() const { return knots_; }

 private:
  RadialKernel(Kind kind, std::vector<double> knots, std::vector<double> values)
      : kind_(kind), knots_(std::move(knots)), values_(std::move(values)) {}

  Kind kind_;
  std::vector<double> knots_;
  std::vector<double> values_;
};

/// P_{s,k}(u) = (2/(u+1))^s F(s - k/2, s + k/2; 1; (u-1)/(u+1)).
/// Throws NonConvergent if 2000 series terms do not reach tol.
double legendre_P(double s, double k, double u, double tol = 1e-16);

/// h(s) = 2 pi ∫_1^U theta(u) P_{s,k}(u) du by adaptive Simpson quadrature.
double shc_transform(const RadialKernel& theta, double s, double k, double quad_tol = 1e-11);

/// Weight-2 transform of the indicator of [1, a] at s = 0: 4 pi log((a+1)/2).
double shc_weight2_indicator(double a);

}  // namespace greenbound
