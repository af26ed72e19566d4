#include "greenbound/point_counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "arith.hpp"
#include "greenbound/errors.hpp"

namespace greenbound {

namespace {

// Relative slack on the enumeration box so that rounding never drops a candidate;
// the exact u-test below decides membership.
constexpr double kBoxSlack = 1e-9;

// Calls visit(gamma) for every gamma in the group with u(z, gamma w) <= b + kThresholdTol.
template <class Visit>
void for_each_translate(const GroupSpec& spec, UhpPoint z, UhpPoint w, double b, Visit&& visit) {
  if (!(b >= 1.0)) throw DomainError("point counting requires b >= 1");
  const double bt = b + kThresholdTol;
  // |cw+d|^2 <= R2, from u >= (t + 1/t)/2 with t = Im z |cw+d|^2 / Im w.
  const double T = bt + std::sqrt(bt * bt - 1.0);
  const double R2 = T * w.y / z.y * (1.0 + kBoxSlack);
  const auto cmax = static_cast<std::int64_t>(std::floor(std::sqrt(R2) / w.y));
  for (std::int64_t c = -cmax; c <= cmax; ++c) {
    const double rest = R2 - static_cast<double>(c * c) * w.y * w.y;
    if (rest < 0.0) continue;
    const double rad = std::sqrt(rest);
    const auto dlo = static_cast<std::int64_t>(std::ceil(-c * w.x - rad));
    const auto dhi = static_cast<std::int64_t>(std::floor(-c * w.x + rad));
    for (std::int64_t d = dlo; d <= dhi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const auto [x0, y0] = detail::bezout(d, -c);  // x0 d - y0 c = 1
      const IntMatrix base{x0, y0, c, d};
      const UhpPoint bw = mobius_apply(base, w);
      // T^k base w = bw + k; need (bw.x + k - z.x)^2 <= 2 Im z Im(bw) (b - 1).
      const double reach = std::sqrt(2.0 * z.y * bw.y * (bt - 1.0)) * (1.0 + kBoxSlack) + 1e-9;
      const auto klo = static_cast<std::int64_t>(std::ceil(z.x - bw.x - reach));
      const auto khi = static_cast<std::int64_t>(std::floor(z.x - bw.x + reach));
      for (std::int64_t k = klo; k <= khi; ++k) {
        const IntMatrix g{x0 + k * c, y0 + k * d, c, d};
        const UhpPoint gw{bw.x + static_cast<double>(k), bw.y};
        if (point_pair_invariant(z, gw) > bt) continue;
        if (!contains(spec, g)) continue;
        visit(g);
      }
    }
  }
}

}  // namespace

std::vector<IntMatrix> enumerate_translates(const GroupSpec& spec, UhpPoint z, UhpPoint w,
                                            double b) {
  std::vector<IntMatrix> out;
  for_each_translate(spec, z, w, b, [&](const IntMatrix& g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMatrix> enumerate_orbit_elements(const GroupSpec& spec, UhpPoint z, double b) {
  return enumerate_translates(spec, z, z, b);
}

std::int64_t count_orbit(const GroupSpec& spec, UhpPoint z, double b) {
  std::int64_t n = 0;
  for_each_translate(spec, z, z, b, [&](const IntMatrix&) { ++n; });
  return n;
}

double bruteforce_entry_bound(UhpPoint z, UhpPoint w, double b) {
  const double gz = z.y + (1.0 + z.x * z.x) / z.y;
  const double gw = w.y + (1.0 + w.x * w.x) / w.y;
  return std::sqrt(gz * gw * 2.0 * (b + kThresholdTol));
}

std::vector<IntMatrix> enumerate_translates_bruteforce(const GroupSpec& spec, UhpPoint z,
                                                       UhpPoint w, double b, int M) {
  if (!(b >= 1.0)) throw DomainError("point counting requires b >= 1");
  const double need = bruteforce_entry_bound(z, w, b);
  if (need > M) {
    throw EntryBoundTooSmall("entry bound " + std::to_string(need) + " exceeds M = " +
                             std::to_string(M));
  }
  const double bt = b + kThresholdTol;
  std::vector<IntMatrix> out;
  auto consider = [&](const IntMatrix& g) {
    if (point_pair_invariant(z, mobius_apply(g, w)) <= bt && contains(spec, g)) out.push_back(g);
  };
  for (std::int64_t a = -M; a <= M; ++a) {
    for (std::int64_t bb = -M; bb <= M; ++bb) {
      for (std::int64_t c = -M; c <= M; ++c) {
        if (a != 0) {
          const std::int64_t num = 1 + bb * c;
          if (num % a != 0) continue;
          const std::int64_t d = num / a;
          if (d < -M || d > M) continue;
          consider({a, bb, c, d});
        } else if (bb * c == -1) {
          for (std::int64_t d = -M; d <= M; ++d) consider({a, bb, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_orbit_bruteforce(const GroupSpec& spec, UhpPoint z, double b, int M) {
  return static_cast<std::int64_t>(enumerate_translates_bruteforce(spec, z, z, b, M).size());
}

StripY0 StripY0::standard() { return {-0.5, 0.5, std::sqrt(3.0) / 2.0, 1.0 / eps_unit(2.0)}; }

double cell_radius(double y0, double h) {
  const double y_low = y0 - h / 2.0;
  // Half-diagonal squared is h^2/2; both heights are >= y_low.
  return std::acosh(1.0 + (h * h / 2.0) / (2.0 * y_low * y_low));
}

CountCertificate sup_count_Y0(double b, double h, unsigned threads) {
  if (!(b > 1.0)) throw DomainError("sup_count_Y0 requires b > 1");
  if (!(h > 0.0 && h <= 0.05)) throw DomainError("grid step must lie in (0, 0.05]");
  const StripY0 strip = StripY0::standard();
  const auto nx = static_cast<std::int64_t>(std::ceil((strip.x_max - strip.x_min) / h - 1e-9));
  const auto ny = static_cast<std::int64_t>(std::ceil((strip.y_max - strip.y_min) / h - 1e-9));
  const GroupSpec full = GroupSpec::full();
  const double arcosh_b = std::acosh(b);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, ny));

  std::atomic<std::int64_t> next_row{0};
  std::vector<std::int64_t> sup(threads, 0), sample(threads, 0);
  auto worker = [&](unsigned t) {
    for (std::int64_t j = next_row++; j < ny; j = next_row++) {
      const double y0 = strip.y_min + (static_cast<double>(j) + 0.5) * h;
      const double inflated = std::cosh(arcosh_b + 2.0 * cell_radius(y0, h));
      for (std::int64_t i = 0; i < nx; ++i) {
        const UhpPoint z0{strip.x_min + (static_cast<double>(i) + 0.5) * h, y0};
        sup[t] = std::max(sup[t], count_orbit(full, z0, inflated));
        sample[t] = std::max(sample[t], count_orbit(full, z0, b));
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
  }
  return {b, h, *std::max_element(sup.begin(), sup.end()),
          *std::max_element(sample.begin(), sample.end()), nx * ny};
}

}  // namespace greenbound
