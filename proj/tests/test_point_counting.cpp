#include <cmath>
#include <random>

#include <doctest.h>

#include "greenbound/errors.hpp"
#include "greenbound/hyperbolic.hpp"
#include "greenbound/modular_group.hpp"
#include "greenbound/point_counting.hpp"

using namespace greenbound;

namespace {

const double kRhoY = std::sqrt(3.0) / 2;

IntMatrix random_member(const GroupSpec& spec, std::mt19937_64& rng) {
  const IntMatrix S{0, -1, 1, 0};
  std::uniform_int_distribution<int> pick(0, 2), pow(-2, 2), len(1, 6);
  for (;;) {
    IntMatrix g = IntMatrix::identity();
    const int steps = len(rng);
    for (int i = 0; i < steps; ++i) g = pick(rng) == 0 ? g * S : g * IntMatrix{1, pow(rng), 0, 1};
    if (contains(spec, g)) return g;
  }
}

}  // namespace

TEST_CASE("count examples") {
  const GroupSpec full = GroupSpec::full();
  CHECK(count_orbit(full, {0, 2}, 1.0) == 2);
  CHECK(count_orbit(full, {0, 1}, 1.0) == 4);
  CHECK(count_orbit(full, {0.5, kRhoY}, 1.0) == 6);
  CHECK(count_orbit(full, {0, 2}, 1.25) == 6);
  CHECK(count_orbit(GroupSpec::gamma1(5), {0, 2}, 1.0) == 1);
  CHECK_THROWS_AS(count_orbit(full, {0, 2}, 0.5), DomainError);
}

TEST_CASE("element lists") {
  const auto els = enumerate_orbit_elements(GroupSpec::full(), {0, 1}, 1.0);
  CHECK(els.size() == 4);
  for (const auto& g : els) CHECK(point_pair_invariant({0, 1}, mobius_apply(g, UhpPoint{0, 1})) ==
                                  doctest::Approx(1.0));
  CHECK(std::is_sorted(els.begin(), els.end()));
}

TEST_CASE("oracle equivalence") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.7, 3.0), ub(1.0, 20.0);
  const GroupSpec groups[] = {GroupSpec::full(), GroupSpec::gamma0(6), GroupSpec::gamma1(5),
                              GroupSpec::principal(3)};
  for (int i = 0; i < 200; ++i) {
    const GroupSpec& spec = groups[i % 4];
    const UhpPoint z{ux(rng), uy(rng)}, w{ux(rng), uy(rng)};
    const double b = ub(rng);
    CAPTURE(spec.name());
    CAPTURE(b);
    CHECK(count_orbit(spec, z, b) == count_orbit_bruteforce(spec, z, b, 40));
    CHECK(enumerate_translates(spec, z, w, b) == enumerate_translates_bruteforce(spec, z, w, b, 40));
  }
  CHECK_THROWS_AS(count_orbit_bruteforce(GroupSpec::full(), {0, 1}, 20.0, 3), EntryBoundTooSmall);
}

TEST_CASE("entry bound covers every solution") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-1, 1), uy(0.3, 4.0), ub(1.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const UhpPoint z{ux(rng), uy(rng)}, w{ux(rng), uy(rng)};
    const double b = ub(rng);
    const double M = bruteforce_entry_bound(z, w, b);
    for (const auto& g : enumerate_translates(GroupSpec::full(), z, w, b)) {
      CHECK(std::abs(double(g.a)) <= M);
      CHECK(std::abs(double(g.b)) <= M);
      CHECK(std::abs(double(g.c)) <= M);
      CHECK(std::abs(double(g.d)) <= M);
    }
  }
}

TEST_CASE("invariance, monotonicity, parity, subgroup bound") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.6, 4.0), ub(1.0, 25.0);
  const GroupSpec groups[] = {GroupSpec::full(), GroupSpec::gamma0(11), GroupSpec::gamma1(7),
                              GroupSpec::principal(4)};
  for (int i = 0; i < 120; ++i) {
    const GroupSpec& spec = groups[i % 4];
    const UhpPoint z{ux(rng), uy(rng)};
    const double b = ub(rng);
    const std::int64_t n = count_orbit(spec, z, b);
    CAPTURE(spec.name());
    const IntMatrix g = random_member(spec, rng);
    CHECK(count_orbit(spec, mobius_apply(g, z), b) == n);
    CHECK(count_orbit(spec, z, b * 1.3) >= n);
    CHECK(n >= 1);
    if (contains_minus_one(spec)) CHECK(n % 2 == 0);
    CHECK(n <= count_orbit(GroupSpec::full(), z, b));
    if (spec.family == Family::full) CHECK(count_orbit(spec, {z.x + 1, z.y}, b) == n);
  }
}

TEST_CASE("certificate basics") {
  CHECK_THROWS_AS(sup_count_Y0(17.0, 0.0), DomainError);
  CHECK_THROWS_AS(sup_count_Y0(17.0, 0.06), DomainError);
  CHECK_THROWS_AS(sup_count_Y0(1.0, 0.01), DomainError);

  const StripY0 y0 = StripY0::standard();
  CHECK(y0.y_min == doctest::Approx(kRhoY));
  CHECK(y0.y_max == doctest::Approx(1 / eps_unit(2.0)));

  // The cell radius dominates the distance from the centre to every corner.
  for (double y : {0.9, 2.0, 7.0}) {
    const double h = 0.02, r = cell_radius(y, h);
    for (double dx : {-h / 2, h / 2})
      for (double dy : {-h / 2, h / 2}) CHECK(hyperbolic_distance({0, y}, {dx, y + dy}) <= r);
  }

  const CountCertificate trivial = sup_count_Y0(1.0000001, 0.05);
  CHECK(trivial.certified_sup >= 4);
  CHECK(trivial.max_sample >= 2);
  CHECK(trivial.cells == 20 * 127);
}

TEST_CASE("certificate dominates pointwise counts") {
  const CountCertificate c = sup_count_Y0(5.0, 0.02, 2);
  CHECK(c.certified_sup >= c.max_sample);
  std::mt19937_64 rng(8);
  const StripY0 y0 = StripY0::standard();
  std::uniform_real_distribution<double> ux(y0.x_min, y0.x_max), uy(y0.y_min, y0.y_max);
  for (int i = 0; i < 300; ++i) {
    CHECK(count_orbit(GroupSpec::full(), {ux(rng), uy(rng)}, 5.0) <= c.certified_sup);
  }
  CHECK(count_orbit(GroupSpec::full(), {0.5, kRhoY}, 5.0) <= c.certified_sup);
  CHECK(count_orbit(GroupSpec::full(), {0.0, 1.0}, 5.0) <= c.certified_sup);
}

TEST_CASE("certificate is deterministic across thread counts") {
  const CountCertificate one = sup_count_Y0(9.0, 0.04, 1);
  CHECK(sup_count_Y0(9.0, 0.04, 3) == one);
  CHECK(sup_count_Y0(9.0, 0.04, 0) == one);
}

TEST_CASE("refinement never increases the certificate") {
  for (double b : {2.0, 3.1472, 6.0, 11.0}) {
    CAPTURE(b);
    std::int64_t prev = sup_count_Y0(b, 0.04).certified_sup;
    for (double h : {0.02, 0.01}) {
      const std::int64_t cur = sup_count_Y0(b, h).certified_sup;
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("certificates are monotone in b") {
  std::int64_t prev = 0;
  for (double b : {1.5, 2.5, 4.0, 8.0}) {
    const std::int64_t cur = sup_count_Y0(b, 0.04).certified_sup;
    CHECK(cur >= prev);
    prev = cur;
  }
}
