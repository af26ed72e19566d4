#include <cmath>
#include <numbers>

#include <doctest.h>

#include "greenbound/errors.hpp"
#include "greenbound/green_assembly.hpp"

using namespace greenbound;

namespace {

constexpr double kPi = std::numbers::pi;

BoundParams simple_params() {
  BoundParams p;
  p.delta = 2.0;
  p.eta = kim_sarnak_eta();
  p.A = -3.00e4;
  p.B = 1.58e4;
  p.C = 137;
  p.sup_F_Y = 25.7;
  p.sup_F_X = 25.7;
  p.genus = 1;
  p.volume = 2 * kPi;
  p.zeta = 25.7;
  p.minus_one_count = 2;
  const double e = eps_unit(2.0), ep = eps_prime_unit(2.0);
  p.cusps = {{"oo", 1, e, ep, 1.0}, {"0", 11, 11 * e, 11 * ep, 11.0}};
  return p;
}

}  // namespace

TEST_CASE("rounding helpers") {
  CHECK(round_up_sig(136.1996) == 137);
  CHECK(round_up_sig(137.0) == 137);
  CHECK(round_up_sig(25.679) == doctest::Approx(25.7));
  CHECK(round_down_sig(25.679) == doctest::Approx(25.6));
  CHECK(round_up_sig(-25.679) == doctest::Approx(-25.6));
  CHECK(round_down_sig(-3.0e4) == doctest::Approx(-3.0e4));
  CHECK(round_up_sig(0.0) == 0.0);
  for (double v : {0.00123456, 1.0, 9.999, 172.0998, 16144.2, 1e7 + 1}) {
    CHECK(round_up_sig(v) >= v);
    CHECK(round_down_sig(v) <= v);
  }
}

TEST_CASE("intervals") {
  CHECK(Interval::make(1, 2).width() == 1);
  CHECK(Interval::make(1, 1).contains(1));
  CHECK_THROWS_AS(Interval::make(2, 1), DomainError);
  CHECK_THROWS_AS(Interval::make(NAN, 1), DomainError);
}

TEST_CASE("constants") {
  CHECK(kim_sarnak_eta() == 0.238037109375);
  CHECK(kim_sarnak_eta() * 4096 == 975.0);
  CHECK(kim_sarnak_eta() <= 0.25);

  CHECK(c_from_pointcount(1) == doctest::Approx(0.602652).epsilon(1e-6));
  CHECK(c_from_pointcount(226) == doctest::Approx(136.20).epsilon(0.01 / 136.2));
  CHECK(round_up_sig(c_from_pointcount(226)) == 137);
  CHECK(c_from_pointcount(227) > c_from_pointcount(226));
  CHECK_THROWS_AS(c_from_pointcount(0), DomainError);

  const double eta = kim_sarnak_eta();
  CHECK(spectral_constant_S(eta, 137, 25.7) == doctest::Approx(172.1).epsilon(0.2 / 172.1));
  CHECK(spectral_constant_S(eta, 137, 0) == 0.0);
  for (double n : {50.0, 100.0, 200.0}) {
    const double s = spectral_constant_S(eta, 137, 0.0125235 * n * n) / n;
    CHECK(s >= 3.79 * 0.99);
    CHECK(s <= 3.81 * 1.01);
  }
  for (double z : {1e-6, 0.5, 25.7, 1e4}) {
    const double a = spectral_constant_S(eta, 137, z), b = spectral_constant_S_logsum(eta, 137, z);
    CHECK(std::abs(a * a - b * b) <= 1e-12 * a * a);
  }
  CHECK_THROWS_AS(spectral_constant_S(0.3, 137, 1), DomainError);

  CHECK(cusp_term_T(25.7, 1, 0.138702) == doctest::Approx(0.003131).epsilon(1e-3));
  CHECK(cusp_term_T(25.7, 1, 0.517638) == doctest::Approx(0.043612).epsilon(1e-4));
  CHECK(cusp_term_T(25.7, 1, 0.0) == 0.0);
  CHECK(cusp_term_T(25.7, 1, 11 * 0.138702) == doctest::Approx(121 * cusp_term_T(25.7, 1, 0.138702)));

  CHECK(r_delta(2.0) == doctest::Approx(0.0269204).epsilon(1e-6));
  CHECK(r_delta(1e12) == doctest::Approx(1.0 / 48).epsilon(1e-5));
  CHECK(r_delta(1e12) > 1.0 / 48);
  CHECK(r_delta(1.0 + 1e-12) > 1e3);
  CHECK_THROWS_AS(r_delta(1.0), DomainError);
}

TEST_CASE("tilde constants") {
  const double ep = eps_prime_unit(2.0);
  const double kappa = 1 - 2 / kPi * std::atan(1 / std::sqrt(2.0));
  CHECK(kappa == doctest::Approx(0.608173).epsilon(1e-6));
  for (int n : {1, 11, 100}) {
    const TildeConstants t = tilde_constants(-3.00e4, 1.58e4, 2, n * ep, 2.0);
    CHECK(t.tilde_A >= -3.00e4 - 0.02787 * n);
    CHECK(t.tilde_B <= 1.58e4 + 2.35 + 0.02787 * n);
    CHECK(t.tilde_A <= t.tilde_B + (1.58e4 + 3.00e4));
  }
  const TildeConstants one = tilde_constants(0, 0, 1, 1.0, 2.0);
  CHECK(one.tilde_B == doctest::Approx(0.608173 + 0.0269204).epsilon(1e-6));
  CHECK(one.tilde_A == doctest::Approx(0.608173 - 0.0269204).epsilon(1e-6));
  const TildeConstants two = tilde_constants(0, 0, 2, 1.0, 2.0);
  CHECK(two.tilde_B == doctest::Approx(2 * one.tilde_B));
}

TEST_CASE("h integral and cusp envelopes") {
  const Interval i = int_h_interval(25.7, kim_sarnak_eta());
  CHECK(i.lo == doctest::Approx(-107.97).epsilon(1e-4));
  CHECK(i.hi == 0.0);
  CHECK(i.width() == doctest::Approx(25.7 / kim_sarnak_eta()));
  CHECK(int_h_interval(0, 0.1) == Interval{0, 0});

  const CuspEnvelope at_boundary = cusp_envelope_h(3, -2, 25.7, 1, kPi / 6, 0.5, 2.0);
  CHECK(at_boundary.h_plus == doctest::Approx(3));
  CHECK(at_boundary.h_minus == doctest::Approx(-2));

  const CuspEnvelope e = cusp_envelope_h(172.1, -172.1, 25.7, 1, kPi / 6, 0.5176, 10.0);
  CHECK(e.h_plus == doctest::Approx(175.24).epsilon(1e-4));
  CHECK(e.h_minus <= e.h_plus);

  const double far = 1e6;
  const CuspEnvelope g = cusp_envelope_h(1, 0, 25.7, 1, 1.0, 0.5, far);
  CHECK(g.h_plus - g.h_minus == doctest::Approx(1 + 25.7 * std::pow(0.5 / (4 * kPi), 2)));
  CHECK_THROWS_AS(cusp_envelope_h(1, 0, 25.7, 1, 1.0, 0.5, 1.9), DomainError);
}

TEST_CASE("parameter validation") {
  BoundParams p = simple_params();
  CHECK_NOTHROW(p.validate());
  p.A = 2e4;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = simple_params();
  p.cusps[0].eps = p.cusps[0].eps_prime;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = simple_params();
  p.cusps[1].eps_prime *= 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = simple_params();
  p.genus = 0;
  CHECK_THROWS_AS(regime_bounds(p), DomainError);
}

TEST_CASE("regime bounds") {
  const BoundParams p = simple_params();
  const BoundReport r = regime_bounds(p);
  CHECK(r.S == doctest::Approx(172.1).epsilon(1e-3));
  CHECK(r.regime_a.hi == doctest::Approx(1.58e4 + 2 * r.S));
  CHECK(r.regime_a.hi == doctest::Approx(16144).epsilon(1e-4));
  CHECK(r.regime_a.lo == doctest::Approx(-3.00e4 - 2 * r.S - 25.7 / kim_sarnak_eta()));
  CHECK(r.regime_a.hi <= r.regime_b.hi);
  CHECK(r.regime_b.hi <= r.regime_c.hi);
  REQUIRE(r.cusps.size() == 2);
  const double T0 = r.cusps[0].T_eps, T1 = r.cusps[1].T_eps;
  CHECK(r.regime_b.hi == doctest::Approx(r.regime_a.hi + std::max(T0, T1)));
  CHECK(r.regime_c.hi == doctest::Approx(r.regime_a.hi + T0 + T1));
  for (const CuspReport& c : r.cusps) {
    CHECK(c.regime_d.hi - c.regime_b.hi ==
          doctest::Approx(2 * c.T_eps_prime - c.T_eps + (c.tilde_B - p.B)));
    CHECK(c.regime_d_sup ==
          doctest::Approx(c.regime_d.hi + (std::log(2.0) - 2 * kPi / c.eps_prime) / kPi));
  }
  CHECK(r.sup_bound >= r.regime_c.hi);

  BoundParams z = p;
  z.zeta = 0;
  z.sup_F_Y = 0;
  z.sup_F_X = 0;
  const BoundReport d = regime_bounds(z);
  CHECK(d.regime_a == Interval{p.A, p.B});

  BoundParams single = p;
  single.cusps.resize(1);
  const BoundReport s = regime_bounds(single);
  CHECK(s.regime_c == s.regime_b);
}

TEST_CASE("reports across groups") {
  for (int n = 1; n <= 200; ++n) {
    for (Family f : {Family::gamma0, Family::gamma1}) {
      const GroupSpec spec = GroupSpec::make(f, n);
      if (genus(spec) == 0) {
        CHECK_THROWS_AS(example_pipeline(spec), GenusZero);
        continue;
      }
      CAPTURE(spec.name());
      const PipelineResult res = example_pipeline(spec);
      const BoundReport& r = res.report;
      for (const Interval& i : {r.int_h, r.regime_a, r.regime_b, r.regime_c, r.regime_d}) {
        CHECK(i.lo <= i.hi);
      }
      for (const CuspReport& c : r.cusps) {
        CHECK(c.regime_b.lo <= c.regime_b.hi);
        CHECK(c.regime_d.lo <= c.regime_d.hi);
        CHECK(c.T_eps >= 0);
      }
      CHECK(r.int_h.hi == 0.0);
      CHECK(r.regime_a.hi <= r.regime_b.hi);
      CHECK(r.regime_b.hi <= r.regime_c.hi);
      CHECK(r.S >= 0);
      CHECK(res.polynomial(n) >= r.sup_bound);
    }
  }
}

TEST_CASE("pipeline for gamma0(11) with fixed counts") {
  const PipelineResult r = example_pipeline(GroupSpec::gamma0(11));
  CHECK(r.genus == 1);
  CHECK(r.params.C == 137);
  CHECK(r.params.sup_F_Y == doctest::Approx(25.7));
  CHECK(r.report.S == doctest::Approx(172.1).epsilon(1e-3));
  REQUIRE(r.report.cusps.size() == 2);
  CHECK(std::abs(r.report.cusps[1].T_eps / 121 - 0.00313) <= 1e-5);
  CHECK(r.report.regime_a.hi == doctest::Approx(16144).epsilon(1e-4));
  CHECK_THROWS_AS(example_pipeline(GroupSpec::gamma1(5)), GenusZero);
  CHECK_THROWS_AS(example_pipeline(GroupSpec::gamma0(10)), GenusZero);
}

TEST_CASE("polynomial coefficients") {
  const PipelineResult r = example_pipeline(GroupSpec::gamma0(11));
  const SupPolynomial& q = r.polynomial;
  CHECK(q.c1 == doctest::Approx(7.626).epsilon(1e-3));
  CHECK(q.c2 == doctest::Approx(0.08722).epsilon(1e-3));
  CHECK(q.c0 >= r.params.B + 2 * r.report.S);

  // Larger zeta inputs never shrink the coefficients.
  BoundParams bigger = r.params;
  bigger.sup_F_Y *= 1.5;
  bigger.sup_F_X *= 1.5;
  bigger.zeta *= 1.5;
  const SupPolynomial b = global_sup_bound(bigger);
  CHECK(b.c0 >= q.c0);
  CHECK(b.c1 >= q.c1);
  CHECK(b.c2 >= q.c2);
}

TEST_CASE("computed counts stay close to the fixed ones") {
  PipelineOptions opt;
  opt.mode = ConstantsMode::computed;
  opt.grid_step = 0.02;
  const PipelineResult c = example_pipeline(GroupSpec::gamma1(13), opt);
  const PipelineResult p = example_pipeline(GroupSpec::gamma1(13));
  REQUIRE(c.count17.has_value());
  CHECK(c.sup_N17 == c.count17->certified_sup);
  CHECK(std::abs(c.params.C / p.params.C - 1) <= 0.2);
  CHECK(std::abs(c.report.S / p.report.S - 1) <= 0.2);
  CHECK(std::abs(c.params.sup_F_Y / p.params.sup_F_Y - 1) <= 0.2);
}
