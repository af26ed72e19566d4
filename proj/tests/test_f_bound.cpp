#include <cmath>
#include <numbers>

#include <doctest.h>

#include "greenbound/errors.hpp"
#include "greenbound/f_bound.hpp"
#include "greenbound/modular_group.hpp"
#include "greenbound/point_counting.hpp"

using namespace greenbound;

TEST_CASE("interior bound") {
  CHECK(f_sup_bound_interior(1.44, 58) == doctest::Approx(25.68).epsilon(0.01 / 25.68));
  CHECK(f_sup_bound_interior(1.44, 116) == doctest::Approx(2 * f_sup_bound_interior(1.44, 58)));
  CHECK(f_sup_bound_interior(3.0, 58) ==
        doctest::Approx(116 / (8 * std::numbers::pi * std::pow(std::log(2.0), 2))));
  CHECK(f_sup_bound_interior(3.0, 58) == doctest::Approx(9.608).epsilon(1e-3));
  CHECK_THROWS_AS(f_sup_bound_interior(1.0, 58), DomainError);
  CHECK_THROWS_AS(f_sup_bound_interior(1.44, 0), DomainError);
  for (std::int64_t n = 1; n < 300; ++n)
    CHECK(f_sup_bound_interior(1.44, n + 1) > f_sup_bound_interior(1.44, n));
  CHECK(f_sup_bound_interior(1.0 + 1e-6, 58) > 1e6);
  CHECK(f_sup_bound_interior(1e9, 58) > f_sup_bound_interior(100.0, 58));
}

TEST_CASE("shape in a") {
  // For fixed N the bound decreases up to the root of log((a+1)/2) = 2(a-1)/(a+1)
  // and increases afterwards.
  double prev = INFINITY;
  for (double a = 1.01; a < 4.0; a += 0.01) {
    const double v = f_sup_bound_interior(a, 58);
    CHECK(v < prev);
    prev = v;
  }
  double best_a = 0, best = INFINITY;
  for (double a = 1.01; a < 30.0; a += 0.001) {
    const double v = f_sup_bound_interior(a, 58);
    if (v < best) {
      best = v;
      best_a = a;
    }
  }
  CHECK(std::log((best_a + 1) / 2) == doctest::Approx(2 * (best_a - 1) / (best_a + 1)).epsilon(1e-3));
  CHECK(best_a == doctest::Approx(8.84).epsilon(0.01));
}

TEST_CASE("cusp extension factor") {
  CHECK(f_cusp_extension_factor(11 * 0.138702) == 1.0);
  CHECK(f_cusp_extension_factor(4 * std::numbers::pi) == doctest::Approx(4 * std::exp(-1.0)));
  CHECK(f_cusp_extension_factor(4 * std::numbers::pi) == doctest::Approx(1.47152).epsilon(1e-5));
  CHECK(f_cusp_extension_factor(2 * std::numbers::pi) == doctest::Approx(1.0));
  CHECK(f_cusp_extension_factor(2 * std::numbers::pi * (1 + 1e-9)) == doctest::Approx(1.0));
  for (double eps : {0.1, 1.0, 6.0, 7.0, 20.0, 100.0, 1e4}) {
    CHECK(f_cusp_extension_factor(eps) >= 1.0);
    CHECK(f_cusp_extension_factor(eps) <= f_cusp_extension_factor_coarse(eps) * (1 + 1e-15));
  }
  CHECK_THROWS_AS(f_cusp_extension_factor(0.0), DomainError);
}

TEST_CASE("sup over X and zeta") {
  const double e = eps_unit(2.0);
  CHECK(f_sup_bound_X(25.7, 45, e) == 25.7);
  CHECK(f_sup_bound_X(25.7, 100, e) == doctest::Approx(25.7 * std::pow(100 * e / (2 * std::numbers::pi), 2)));
  CHECK(f_sup_bound_X(25.7, 100, e) == doctest::Approx(125.2).epsilon(1e-3));
  CHECK(f_sup_bound_X(25.7, 100, e) <= 0.0126 * 100 * 100);
  CHECK(f_sup_bound_X(25.68, 1, e) == 25.68);
  CHECK(zeta_bound(25.7, 1) == 25.7);
  CHECK(zeta_bound(25.7, 5) == doctest::Approx(5.14));
  CHECK_THROWS_AS(zeta_bound(25.7, 0), DomainError);

  for (int n : {1, 11, 45, 46, 100, 200}) {
    const FBoundResult r = f_bounds(1.44, 58, n, e, 2);
    CHECK(r.sup_Y <= r.sup_X);
    CHECK(r.zeta <= r.sup_X);
    CHECK(r.zeta >= 0.0);
  }
}

TEST_CASE("end to end with a certified count") {
  const CountCertificate c = sup_count_Y0(2 * 1.44 * 1.44 - 1, 0.01);
  CHECK(c.certified_sup >= 58);
  CHECK(c.certified_sup <= 68);
  const double sup_Y = f_sup_bound_interior(1.44, c.certified_sup);
  // 25.68 is the 4-figure rounding of the value at N = 58.
  CHECK(sup_Y >= 25.675);
  CHECK(sup_Y <= 30.2);
}
