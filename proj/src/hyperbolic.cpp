#include "greenbound/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "greenbound/errors.hpp"
#include "greenbound/modular_group.hpp"
#include "greenbound/point_counting.hpp"

namespace greenbound {

UhpPoint UhpPoint::make(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw DomainError("UhpPoint requires finite x and y > 0, got (" + std::to_string(x) + ", " +
                      std::to_string(y) + ")");
  }
  return {x, y};
}

Moebius Moebius::make(double a, double b, double c, double d) {
  Moebius m{a, b, c, d};
  if (!(std::abs(m.det() - 1.0) <= kThresholdTol)) {
    throw DomainError("Moebius matrix must have determinant 1, got " + std::to_string(m.det()));
  }
  return m;
}

Moebius Moebius::from(const IntMatrix& m) {
  if (m.det() != 1) throw DomainError("integer matrix must have determinant 1");
  return {static_cast<double>(m.a), static_cast<double>(m.b), static_cast<double>(m.c),
          static_cast<double>(m.d)};
}

UhpPoint mobius_apply(const Moebius& m, UhpPoint z) {
  const std::complex<double> w = z.as_complex();
  const std::complex<double> den = m.c * w + m.d;
  const std::complex<double> num = m.a * w + m.b;
  const double den2 = std::norm(den);
  // Im((az+b)/(cz+d)) = y / |cz+d|^2 for det 1; computed directly to keep it positive.
  const double x = std::real(num * std::conj(den)) / den2;
  return {x, z.y / den2};
}

UhpPoint mobius_apply(const IntMatrix& m, UhpPoint z) { return mobius_apply(Moebius::from(m), z); }

double point_pair_invariant(UhpPoint z, UhpPoint w) {
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  return 1.0 + (dx * dx + dy * dy) / (2.0 * (z.y * w.y));
}

double hyperbolic_distance(UhpPoint z, UhpPoint w) {
  // arcosh(1 + t) = log1p(t + sqrt(t (t + 2))) keeps precision for nearby points.
  const double dx = z.x - w.x;
  const double dy = z.y - w.y;
  const double t = (dx * dx + dy * dy) / (2.0 * (z.y * w.y));
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double free_green_L(double u) {
  if (!(u > 1.0)) throw DomainError("L(u) requires u > 1");
  return std::log((u + 1.0) / (u - 1.0)) / (4.0 * std::numbers::pi);
}

double singular_sum(const GroupSpec& spec, UhpPoint z, UhpPoint w, double delta) {
  if (!(delta > 1.0)) throw DomainError("singular_sum requires delta > 1");
  const double L_delta = free_green_L(delta);
  double sum = 0.0;
  for (const IntMatrix& g : enumerate_translates(spec, z, w, delta)) {
    const double u = point_pair_invariant(z, mobius_apply(g, w));
    if (u <= 1.0 + 1e-14) throw OrbitCoincidence("z lies in the orbit of w");
    if (u <= delta) sum += free_green_L(u) - L_delta;
  }
  return sum;
}

}  // namespace greenbound
