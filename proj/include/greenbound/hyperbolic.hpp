#pragma once

#include <complex>
#include <cstdint>

namespace greenbound {

struct GroupSpec;

/// Absolute tolerance used for every threshold comparison (u <= b, det == 1, ...).
inline constexpr double kThresholdTol = 1e-12;

/// A point x + iy of the upper half-plane.
struct UhpPoint {
  double x = 0.0;
  double y = 1.0;

  /// Validating constructor: requires finite coordinates and y > 0.
  static UhpPoint make(double x, double y);

  std::complex<double> as_complex() const { return {x, y}; }

  friend bool operator==(const UhpPoint&, const UhpPoint&) = default;
};

/// Integer matrix of SL2(Z); determinant is not enforced by the type.
struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr IntMatrix identity() { return {1, 0, 0, 1}; }
  constexpr std::int64_t det() const { return a * d - b * c; }
  constexpr IntMatrix inverse() const { return {d, -b, -c, a}; }
  constexpr IntMatrix operator-() const { return {-a, -b, -c, -d}; }

  friend constexpr IntMatrix operator*(const IntMatrix& l, const IntMatrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

/// Real 2x2 matrix of determinant 1 acting by fractional linear transformations.
struct Moebius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  /// Rejects |ad - bc - 1| > kThresholdTol.
  static Moebius make(double a, double b, double c, double d);
  static Moebius from(const IntMatrix& m);
  static Moebius identity() { return {}; }

  double det() const { return a * d - b * c; }
  Moebius inverse() const { return {d, -b, -c, a}; }

  friend Moebius operator*(const Moebius& l, const Moebius& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
};

UhpPoint mobius_apply(const Moebius& m, UhpPoint z);
UhpPoint mobius_apply(const IntMatrix& m, UhpPoint z);

/// u(z,w) = 1 + |z-w|^2 / (2 Im z Im w), the hyperbolic cosine of the distance.
/// Bit-symmetric in its arguments.
double point_pair_invariant(UhpPoint z, UhpPoint w);

double hyperbolic_distance(UhpPoint z, UhpPoint w);

/// L(u) = log((u+1)/(u-1)) / (4 pi), the free-space Green kernel; requires u > 1.
double free_green_L(double u);

/// Sum over gamma in the group with u(z, gamma w) <= delta of L(u(z, gamma w)) - L(delta).
/// Throws OrbitCoincidence when some u(z, gamma w) <= 1 + 1e-14.
double singular_sum(const GroupSpec& spec, UhpPoint z, UhpPoint w, double delta);

}  // namespace greenbound
