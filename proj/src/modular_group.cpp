#include "greenbound/modular_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "arith.hpp"
#include "greenbound/errors.hpp"

namespace greenbound {

using detail::divisors;
using detail::euler_phi;
using detail::mod;
using detail::prime_factors;

std::string_view to_string(Family f) {
  switch (f) {
    case Family::full: return "full";
    case Family::gamma0: return "gamma0";
    case Family::gamma1: return "gamma1";
    case Family::principal: return "principal";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::full, Family::gamma0, Family::gamma1, Family::principal})
    if (to_string(f) == name) return f;
  throw DomainError("unknown group family '" + std::string(name) + "'");
}

GroupSpec GroupSpec::make(Family family, int level) {
  if (level < 1) throw DomainError("level must be >= 1");
  return {family, family == Family::full ? 1 : level};
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::full: return "SL2(Z)";
    case Family::gamma0: return "Gamma0(" + std::to_string(level) + ")";
    case Family::gamma1: return "Gamma1(" + std::to_string(level) + ")";
    case Family::principal: return "Gamma(" + std::to_string(level) + ")";
  }
  return "?";
}

bool contains(const GroupSpec& spec, const IntMatrix& m) {
  if (m.det() != 1) throw DomainError("membership test requires det 1");
  const std::int64_t n = spec.effective_level();
  if (n == 1) return true;
  switch (spec.family) {
    case Family::full: return true;
    case Family::gamma0: return mod(m.c, n) == 0;
    case Family::gamma1: return mod(m.c, n) == 0 && mod(m.a, n) == 1 % n && mod(m.d, n) == 1 % n;
    case Family::principal:
      return mod(m.c, n) == 0 && mod(m.b, n) == 0 && mod(m.a, n) == 1 % n &&
             mod(m.d, n) == 1 % n;
  }
  return false;
}

bool contains_minus_one(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::full:
    case Family::gamma0: return true;
    case Family::gamma1:
    case Family::principal: return spec.level <= 2;
  }
  return false;
}

int minus_one_count(const GroupSpec& spec) { return contains_minus_one(spec) ? 2 : 1; }

namespace {

// n^k prod_{p | n} (1 - 1/p^2)
std::int64_t jordan_like(std::int64_t n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  for (std::int64_t p : prime_factors(n)) r = r / (p * p) * (p * p - 1);
  return r;
}

int kronecker_minus1(std::int64_t p) { return p == 2 ? 0 : (p % 4 == 1 ? 1 : -1); }
int kronecker_minus3(std::int64_t p) { return p == 3 ? 0 : (p % 3 == 1 ? 1 : -1); }

}  // namespace

std::int64_t index_in_sl2z(const GroupSpec& spec) {
  const std::int64_t n = spec.effective_level();
  switch (spec.family) {
    case Family::full: return 1;
    case Family::gamma0: {
      std::int64_t r = n;
      for (std::int64_t p : prime_factors(n)) r = r / p * (p + 1);
      return r;
    }
    case Family::gamma1: return jordan_like(n, 2);
    case Family::principal: return jordan_like(n, 3);
  }
  return 0;
}

std::int64_t index_in_psl2z(const GroupSpec& spec) {
  const std::int64_t i = index_in_sl2z(spec);
  return contains_minus_one(spec) ? i : i / 2;
}

SignatureCounts signature_counts(const GroupSpec& spec) {
  const std::int64_t n = spec.effective_level();
  SignatureCounts s;
  s.psl_index = index_in_psl2z(spec);
  if (n == 1) return {1, 1, 1, 1};

  Family family = spec.family;
  // Gamma1(2) = Gamma0(2).
  if (family == Family::gamma1 && n == 2) family = Family::gamma0;

  switch (family) {
    case Family::full: break;
    case Family::gamma0: {
      const auto ps = prime_factors(n);
      s.nu2 = 0;
      s.nu3 = 0;
      if (n % 4 != 0) {
        s.nu2 = 1;
        for (std::int64_t p : ps) s.nu2 *= 1 + kronecker_minus1(p);
      }
      if (n % 9 != 0) {
        s.nu3 = 1;
        for (std::int64_t p : ps) s.nu3 *= 1 + kronecker_minus3(p);
      }
      s.cusps = 0;
      for (std::int64_t d : divisors(n)) s.cusps += euler_phi(std::gcd(d, n / d));
      break;
    }
    case Family::gamma1: {
      if (n == 3) {
        s.nu3 = 1;
        s.cusps = 2;
      } else if (n == 4) {
        s.cusps = 3;
      } else {
        std::int64_t twice = 0;
        for (std::int64_t d : divisors(n)) twice += euler_phi(d) * euler_phi(n / d);
        s.cusps = twice / 2;
      }
      break;
    }
    case Family::principal: s.cusps = s.psl_index / n; break;
  }
  return s;
}

double volume(const GroupSpec& spec) {
  return std::numbers::pi / 3.0 * static_cast<double>(index_in_psl2z(spec)) /
         static_cast<double>(minus_one_count(spec));
}

int genus(const GroupSpec& spec) {
  const SignatureCounts s = signature_counts(spec);
  const std::int64_t twelve_g = 12 + s.psl_index - 3 * s.nu2 - 4 * s.nu3 - 6 * s.cusps;
  return static_cast<int>(twelve_g / 12);
}

std::string CuspRepresentative::to_string() const {
  if (is_infinity()) return "oo";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

CuspData make_cusp(std::int64_t a, std::int64_t c, int width) {
  CuspData cusp;
  cusp.width = width;
  IntMatrix g = IntMatrix::identity();
  if (c == 0) {
    cusp.representative = {1, 0};
  } else {
    cusp.representative = {a, c};
    // a d - b c = 1
    const auto [x, y] = detail::bezout(a, c);
    g = {a, -y, c, x};
  }
  cusp.base = g;
  const double s = std::sqrt(static_cast<double>(width));
  cusp.scaling = Moebius::from(g) * Moebius{s, 0.0, 0.0, 1.0 / s};
  return cusp;
}

}  // namespace

std::vector<CuspData> cusps(const GroupSpec& spec) {
  if (spec.family == Family::full || spec.effective_level() == 1) return {make_cusp(1, 0, 1)};
  if (spec.family != Family::gamma0) {
    throw UnsupportedFamily("exact cusp enumeration is only available for SL2(Z) and Gamma0(n); " +
                            spec.name() + " requested");
  }
  const std::int64_t n = spec.level;
  std::vector<CuspData> out;
  for (std::int64_t d : divisors(n)) {
    const int width = static_cast<int>(n / std::gcd(d * d, n));
    if (d == n) {
      out.push_back(make_cusp(1, 0, width));
      continue;
    }
    const std::int64_t g = std::gcd(d, n / d);
    for (std::int64_t r = 0; r < g; ++r) {
      if (std::gcd(r, g) != 1) continue;
      std::int64_t a = r;
      while (std::gcd(a, d) != 1) a += g;
      out.push_back(make_cusp(a, d, width));
    }
  }
  // oo first, then by denominator.
  std::stable_sort(out.begin(), out.end(), [](const CuspData& l, const CuspData& r) {
    return l.representative.is_infinity() && !r.representative.is_infinity();
  });
  return out;
}

std::vector<int> cusp_widths(const GroupSpec& spec) {
  const std::int64_t n = spec.effective_level();
  std::vector<int> widths;
  if (spec.family == Family::full || spec.family == Family::gamma0 || n <= 2) {
    const GroupSpec as_gamma0 = n == 1 ? GroupSpec::full() : GroupSpec::gamma0(static_cast<int>(n));
    if (spec.family == Family::principal && n == 2) {
      widths = {2, 2, 2};
    } else {
      for (const CuspData& c : cusps(as_gamma0)) widths.push_back(c.width);
    }
  } else if (spec.family == Family::gamma1) {
    if (n == 3) {
      widths = {1, 3};
    } else if (n == 4) {
      widths = {1, 1, 4};
    } else {
      for (std::int64_t d : divisors(n)) {
        const std::int64_t count = euler_phi(d) * euler_phi(n / d) / 2;
        for (std::int64_t i = 0; i < count; ++i) widths.push_back(static_cast<int>(n / d));
      }
    }
  } else {
    const std::int64_t count = index_in_psl2z(spec) / n;
    widths.assign(static_cast<std::size_t>(count), static_cast<int>(n));
  }
  std::sort(widths.begin(), widths.end());
  return widths;
}

CuspCoordinates cusp_coordinates(UhpPoint z, const CuspData& cusp) {
  const UhpPoint w = mobius_apply(cusp.scaling.inverse(), z);
  const double two_pi = 2.0 * std::numbers::pi;
  return {std::polar(std::exp(-two_pi * w.y), two_pi * w.x), w.y};
}

double min_c_lower_bound(const GroupSpec&, const CuspData& cusp) {
  return static_cast<double>(cusp.width);
}

double eps_unit(double delta) {
  if (!(delta > 1.0)) throw DomainError("delta must exceed 1");
  return std::pow(delta + std::sqrt(delta * delta - 1.0), -1.5);
}

double eps_prime_unit(double delta) {
  if (!(delta > 1.0)) throw DomainError("delta must exceed 1");
  return std::pow(delta + std::sqrt(delta * delta - 1.0), -0.5);
}

std::vector<CuspEpsilons> admissible_epsilons(const GroupSpec& spec, double delta) {
  const double lambda = delta + std::sqrt(delta * delta - 1.0);
  const double e = eps_unit(delta);
  const double ep = eps_prime_unit(delta);
  std::vector<CuspEpsilons> out;
  for (int m : cusp_widths(spec)) {
    CuspEpsilons ce{m, m * e, m * ep};
    const double tol = 1e-12 * m;
    if (ce.eps_prime * std::sqrt(lambda) > m + tol || lambda * ce.eps > ce.eps_prime + tol) {
      throw DomainError("admissibility inequalities violated");
    }
    out.push_back(ce);
  }
  return out;
}

bool spot_check_disjoint_discs(const GroupSpec& spec, double delta, int samples_per_cusp) {
  const auto cs = cusps(spec);
  const double ep = eps_prime_unit(delta);
  const std::int64_t n = spec.effective_level();
  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    const CuspData& c = cs[ci];
    const double eps_c = c.width * ep;
    for (int s = 0; s < samples_per_cusp; ++s) {
      // Points of D_c(eps'_c) just inside its boundary, spread along the horocycle.
      const double x = (s + 0.5) / samples_per_cusp;
      const double y = (1.0 / eps_c) * (1.0 + 1e-6 + 0.5 * (s % 3));
      const UhpPoint z = mobius_apply(c.scaling, UhpPoint{x, y});
      for (std::size_t di = 0; di < cs.size(); ++di) {
        if (di == ci) continue;
        const CuspData& d = cs[di];
        // y_d(gamma z) = Im(g_d^{-1} gamma z) / m_d > 1/eps'_d  <=>  Im(N z) > 1/eps',
        // N = g_d^{-1} gamma; Im(N z) = Im z / |c' z + d'|^2.
        const double bound = ep * z.y;  // |c' z + d'|^2 < bound
        const auto cmax = static_cast<std::int64_t>(std::floor(std::sqrt(bound) / z.y));
        for (std::int64_t cc = -cmax; cc <= cmax; ++cc) {
          const double rad2 = bound - double(cc) * cc * z.y * z.y;
          if (rad2 <= 0) continue;
          const double rad = std::sqrt(rad2);
          const auto dlo = static_cast<std::int64_t>(std::ceil(-cc * z.x - rad));
          const auto dhi = static_cast<std::int64_t>(std::floor(-cc * z.x + rad));
          for (std::int64_t dd = dlo; dd <= dhi; ++dd) {
            if (std::gcd(cc, dd) != 1) continue;
            const auto [x0, y0] = detail::bezout(dd, -cc);  // x0 dd - y0 cc = 1
            const IntMatrix N0{x0, y0, cc, dd};
            for (std::int64_t k = 0; k < n; ++k) {
              const IntMatrix Tk{1, k, 0, 1};
              if (contains(spec, d.base * Tk * N0)) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace greenbound
