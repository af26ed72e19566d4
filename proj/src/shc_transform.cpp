#include "greenbound/shc_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "greenbound/errors.hpp"
#include "quadrature.hpp"

namespace greenbound {

RadialKernel RadialKernel::indicator(double a) {
  if (!(a > 1.0)) throw DomainError("indicator kernel requires a > 1");
  return RadialKernel(Kind::indicator, {1.0, a}, {1.0, 1.0});
}

RadialKernel RadialKernel::sampled(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size())
    throw DomainError("sampled kernel needs >= 2 knots with matching values");
  if (knots.front() < 1.0) throw DomainError("sampled kernel must be supported in [1, U]");
  if (!std::is_sorted(knots.begin(), knots.end()) ||
      std::adjacent_find(knots.begin(), knots.end()) != knots.end())
    throw DomainError("sampled kernel knots must be strictly increasing");
  return RadialKernel(Kind::sampled, std::move(knots), std::move(values));
}

double RadialKernel::operator()(double u) const {
  if (u < knots_.front() || u > knots_.back()) return 0.0;
  if (kind_ == Kind::indicator) return 1.0;
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  if (it == knots_.end()) return values_.back();
  const auto i = static_cast<std::size_t>(it - knots_.begin());
  const double t = (u - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double legendre_P(double s, double k, double u, double tol) {
  if (!(u >= 1.0)) throw DomainError("P_{s,k}(u) requires u >= 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double t = (u - 1.0) / (u + 1.0);
  const double alpha = s - k / 2.0;
  const double beta = s + k / 2.0;
  double term = 1.0;
  double sum = 1.0;
  constexpr int kMaxTerms = 2000;
  for (int n = 0;; ++n) {
    if (n >= kMaxTerms) {
      throw NonConvergent("hypergeometric series did not converge for s=" + std::to_string(s) +
                          ", k=" + std::to_string(k) + ", u=" + std::to_string(u));
    }
    const double ratio = (alpha + n) * (beta + n) / ((n + 1.0) * (n + 1.0)) * t;
    term *= ratio;
    if (term == 0.0) break;  // terminating series
    sum += term;
    if (std::abs(term) < tol * (1.0 + std::abs(sum)) && std::abs(ratio) < 1.0) break;
  }
  return std::pow(2.0 / (u + 1.0), s) * sum;
}

double shc_transform(const RadialKernel& theta, double s, double k, double quad_tol) {
  if (!(quad_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const auto& bp = theta.breakpoints();
  const double total = bp.back() - bp.front();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    // Split the error budget by length; the 2 pi factor is applied afterwards.
    const double piece_tol = quad_tol / (2.0 * std::numbers::pi) * (bp[i + 1] - bp[i]) / total;
    const double lo = bp[i], hi = bp[i + 1];
    // Evaluate theta strictly inside each piece so the one-sided limits are used.
    auto piece = [&](double u) {
      const double inner = std::clamp(u, lo + (hi - lo) * 1e-15, hi - (hi - lo) * 1e-15);
      return theta(inner) * legendre_P(s, k, u);
    };
    acc += detail::adaptive_simpson(piece, lo, hi, piece_tol);
  }
  return 2.0 * std::numbers::pi * acc;
}

double shc_weight2_indicator(double a) {
  if (!(a > 1.0)) throw DomainError("cut-off a must exceed 1");
  return 4.0 * std::numbers::pi * std::log((a + 1.0) / 2.0);
}

}  // namespace greenbound
