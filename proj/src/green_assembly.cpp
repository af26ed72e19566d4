#include "greenbound/green_assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "greenbound/errors.hpp"

namespace greenbound {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 - (2/pi) arctan sqrt((delta-1)/2)
double tilde_bracket_base(double delta) {
  return 1.0 - 2.0 / kPi * std::atan(std::sqrt((delta - 1.0) / 2.0));
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Interval Interval::make(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw DomainError("invalid interval");
  return {lo, hi};
}

double round_up_sig(double v, int digits) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  const double e = std::floor(std::log10(std::abs(v)));
  const double scale = std::pow(10.0, digits - 1 - e);
  // The 1e-9 absorbs representation error in v * scale.
  return std::ceil(v * scale - 1e-9) / scale;
}

double round_down_sig(double v, int digits) { return -round_up_sig(-v, digits); }

void BoundParams::validate() const {
  require(delta > 1.0, "delta must exceed 1");
  require(eta > 0.0 && eta <= 0.25, "eta must lie in (0, 1/4]");
  require(A <= B, "A must not exceed B");
  require(C > 0.0, "C must be positive");
  require(sup_F_Y >= 0.0 && sup_F_X >= 0.0, "sup F bounds must be non-negative");
  require(genus >= 1, "positive genus required");
  require(volume > 0.0, "volume must be positive");
  require(zeta >= 0.0, "zeta must be non-negative");
  require(minus_one_count == 1 || minus_one_count == 2, "#(Gamma ∩ {±1}) must be 1 or 2");
  require(!cusps.empty(), "at least one cusp required");
  const double lambda = delta + std::sqrt(delta * delta - 1.0);
  for (const CuspParams& c : cusps) {
    require(c.eps > 0.0 && c.eps < c.eps_prime, "need 0 < eps_c < eps'_c");
    const double tol = 1e-12 * std::max(1.0, c.min_c);
    require(c.eps_prime * std::sqrt(lambda) <= c.min_c + tol,
            "eps'_c (delta + sqrt(delta^2-1))^(1/2) exceeds min C_c");
    require(lambda * c.eps <= c.eps_prime + tol, "(delta + sqrt(delta^2-1)) eps_c exceeds eps'_c");
  }
}

double c_from_pointcount(std::int64_t sup_N17) {
  if (sup_N17 < 1) throw DomainError("point count must be >= 1");
  const double s = 2.0 * kPi - 4.0;
  return kPi / (s * s) * static_cast<double>(sup_N17);
}

double spectral_constant_S(double eta, double C, double zeta) {
  require(eta > 0.0 && eta <= 0.25, "eta must lie in (0, 1/4]");
  require(C > 0.0 && zeta >= 0.0, "need C > 0 and zeta >= 0");
  return std::sqrt((1.0 / (4.0 * eta * eta) + 4.0) * C * zeta);
}

double spectral_constant_S_logsum(double eta, double C, double zeta) {
  require(eta > 0.0 && eta <= 0.25, "eta must lie in (0, 1/4]");
  require(C > 0.0 && zeta >= 0.0, "need C > 0 and zeta >= 0");
  if (zeta == 0.0) return 0.0;
  const double log_sq =
      std::log(1.0 / (4.0 * eta * eta) + 4.0) + std::log(C) + std::log(zeta);
  return std::exp(0.5 * log_sq);
}

double cusp_term_T(double sup_F_Y, int genus, double eps) {
  require(genus >= 1, "positive genus required");
  require(sup_F_Y >= 0.0 && eps >= 0.0, "T requires non-negative inputs");
  const double r = eps / (4.0 * kPi);
  return sup_F_Y / genus * r * r;
}

double r_delta(double delta) {
  require(delta > 1.0, "delta must exceed 1");
  return (std::sqrt(2.0 / (delta - 1.0)) + std::atan(std::sqrt((delta - 1.0) / 2.0))) /
         (24.0 * kPi);
}

TildeConstants tilde_constants(double A, double B, int minus_one_count, double eps_prime_c,
                               double delta) {
  require(eps_prime_c > 0.0, "eps'_c must be positive");
  const double base = tilde_bracket_base(delta) / eps_prime_c;
  const double shift = eps_prime_c * r_delta(delta);
  return {A + minus_one_count * (base - shift), B + minus_one_count * (base + shift)};
}

Interval int_h_interval(double zeta, double eta) {
  require(zeta >= 0.0 && eta > 0.0, "need zeta >= 0 and eta > 0");
  return {-zeta / eta, 0.0};
}

CuspEnvelope cusp_envelope_h(double boundary_sup, double boundary_inf, double sup_F_boundary,
                             int genus, double volume, double eps, double y_c) {
  require(eps > 0.0 && volume > 0.0 && genus >= 1, "invalid envelope parameters");
  require(y_c >= 1.0 / eps, "point must lie in the cusp disc (y_c >= 1/eps)");
  const double log_term = std::log(eps * y_c) / volume;
  const double r = eps / (4.0 * kPi);
  const double decay = 1.0 - std::exp(4.0 * kPi / eps - 4.0 * kPi * y_c);
  return {boundary_inf - sup_F_boundary / genus * r * r * decay + log_term,
          boundary_sup + log_term};
}

double q_term_sup(int minus_one_count, double eps_prime_c) {
  require(eps_prime_c > 0.0, "eps'_c must be positive");
  return minus_one_count / (2.0 * kPi) * (std::log(2.0) - 2.0 * kPi / eps_prime_c);
}

BoundReport regime_bounds(const BoundParams& p) {
  p.validate();
  BoundReport r;
  r.S = spectral_constant_S(p.eta, p.C, p.zeta);
  r.r_delta = r_delta(p.delta);
  r.zeta_over_eta = p.zeta / p.eta;
  r.int_h = int_h_interval(p.zeta, p.eta);

  const double lo = p.A - 2.0 * r.S - r.zeta_over_eta;
  const double hi = p.B + 2.0 * r.S;
  r.regime_a = Interval::make(lo, hi);

  double max_T = 0.0, second_T = 0.0;
  double d_lo = 0.0, d_hi = 0.0, d_sup = 0.0;
  for (std::size_t i = 0; i < p.cusps.size(); ++i) {
    const CuspParams& c = p.cusps[i];
    CuspReport cr;
    cr.label = c.label;
    cr.width = c.width;
    cr.eps = c.eps;
    cr.eps_prime = c.eps_prime;
    cr.T_eps = cusp_term_T(p.sup_F_Y, p.genus, c.eps);
    cr.T_eps_prime = cusp_term_T(p.sup_F_Y, p.genus, c.eps_prime);
    const TildeConstants t = tilde_constants(p.A, p.B, p.minus_one_count, c.eps_prime, p.delta);
    cr.tilde_A = t.tilde_A;
    cr.tilde_B = t.tilde_B;
    cr.regime_b = Interval::make(lo, hi + cr.T_eps);
    cr.regime_d = Interval::make(t.tilde_A - 2.0 * r.S - r.zeta_over_eta,
                                 t.tilde_B + 2.0 * r.S + 2.0 * cr.T_eps_prime);
    cr.regime_d_sup = cr.regime_d.hi + q_term_sup(p.minus_one_count, c.eps_prime);

    if (cr.T_eps > max_T) {
      second_T = max_T;
      max_T = cr.T_eps;
    } else if (cr.T_eps > second_T) {
      second_T = cr.T_eps;
    }
    d_lo = i == 0 ? cr.regime_d.lo : std::min(d_lo, cr.regime_d.lo);
    d_hi = i == 0 ? cr.regime_d.hi : std::max(d_hi, cr.regime_d.hi);
    d_sup = i == 0 ? cr.regime_d_sup : std::max(d_sup, cr.regime_d_sup);
    r.cusps.push_back(std::move(cr));
  }
  r.regime_b = Interval::make(lo, hi + max_T);
  // Two distinct cusps are needed for (c); with a single cusp it coincides with (b).
  r.regime_c = Interval::make(lo, hi + max_T + (p.cusps.size() > 1 ? second_T : 0.0));
  r.regime_d = Interval::make(d_lo, d_hi);
  r.sup_bound = std::max({r.regime_a.hi, r.regime_b.hi, r.regime_c.hi, d_sup});
  return r;
}

SupPolynomial global_sup_bound(const BoundParams& p) {
  p.validate();
  const double e = eps_unit(p.delta);
  const double ep = eps_prime_unit(p.delta);
  const double K = (1.0 / (4.0 * p.eta * p.eta) + 4.0) * p.C;
  // zeta <= max{z0, z2 n^2}, hence S <= sqrt(K z0) + sqrt(K z2) n.
  const double z0 = p.sup_F_Y / p.genus;
  const double z2 = z0 * std::pow(e / (2.0 * kPi), 2);
  const double t_eps = cusp_term_T(p.sup_F_Y, p.genus, e);
  const double t_eps_prime = cusp_term_T(p.sup_F_Y, p.genus, ep);
  // Regime (d) with eps'_c = m ep and #(Gamma ∩ {±1}) <= 2: the bracket of B~_c plus the
  // q-term sup equals 2[(kappa - 1)/(m ep) + m ep r_delta + log 2 / 2pi], kappa <= 1.
  constexpr int kMinusOne = 2;
  SupPolynomial poly;
  poly.c0 = p.B + 2.0 * std::sqrt(K * z0) + kMinusOne * std::log(2.0) / (2.0 * kPi);
  poly.c1 = 2.0 * std::sqrt(K * z2) + kMinusOne * ep * r_delta(p.delta);
  poly.c2 = std::max(2.0 * t_eps, 2.0 * t_eps_prime);
  return poly;
}

PipelineResult example_pipeline(const GroupSpec& spec, const PipelineOptions& opt) {
  PipelineResult res;
  res.spec = spec;
  res.mode = opt.mode;
  res.genus = genus(spec);
  if (res.genus < 1) throw GenusZero(spec.name() + " has genus zero");
  res.genus_used = opt.use_genus ? res.genus : 1;
  res.volume = volume(spec);
  res.eps = eps_unit(opt.delta);
  res.eps_prime = eps_prime_unit(opt.delta);
  res.small_threshold = 2.0 * opt.a * opt.a - 1.0;

  if (opt.mode == ConstantsMode::paper) {
    res.sup_N17 = kPaperSupN17;
    res.sup_N_small = kPaperSupNSmall;
  } else {
    res.count17 = opt.count17 ? *opt.count17 : sup_count_Y0(17.0, opt.grid_step, opt.threads);
    res.count_small = opt.count_small
                          ? *opt.count_small
                          : sup_count_Y0(res.small_threshold, opt.grid_step, opt.threads);
    res.sup_N17 = res.count17->certified_sup;
    res.sup_N_small = res.count_small->certified_sup;
  }

  res.C_raw = c_from_pointcount(res.sup_N17);
  res.sup_F_Y_raw = f_sup_bound_interior(opt.a, res.sup_N_small);
  const double sup_Y = round_up_sig(res.sup_F_Y_raw, 3);
  const int level = spec.effective_level();
  const double sup_X = f_sup_bound_X(sup_Y, level, res.eps);
  res.zeta_coarse = zeta_bound(sup_X, 1);
  res.zeta_genus = zeta_bound(sup_X, res.genus);
  res.f = {opt.a, res.sup_N_small, sup_Y, sup_X,
           opt.use_genus ? res.zeta_genus : res.zeta_coarse};

  BoundParams& p = res.params;
  p.delta = opt.delta;
  p.eta = kim_sarnak_eta();
  p.A = opt.A;
  p.B = opt.B;
  p.C = round_up_sig(res.C_raw, 3);
  p.sup_F_Y = sup_Y;
  p.sup_F_X = sup_X;
  p.genus = res.genus_used;
  p.volume = res.volume;
  p.zeta = res.f.zeta;
  p.minus_one_count = minus_one_count(spec);

  if (spec.family == Family::full || spec.family == Family::gamma0) {
    for (const CuspData& c : cusps(spec)) {
      p.cusps.push_back({c.representative.to_string(), c.width, c.width * res.eps,
                         c.width * res.eps_prime, min_c_lower_bound(spec, c)});
    }
  } else {
    int i = 0;
    for (const CuspEpsilons& ce : admissible_epsilons(spec, opt.delta)) {
      p.cusps.push_back({"width" + std::to_string(ce.width) + "#" + std::to_string(i++),
                         ce.width, ce.eps, ce.eps_prime, static_cast<double>(ce.width)});
    }
  }

  res.report = regime_bounds(p);
  res.polynomial = global_sup_bound(p);
  return res;
}

}  // namespace greenbound
