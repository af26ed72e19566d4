#pragma once

// Small integer helpers shared by the modular_group sources.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace greenbound::detail {

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// (x, y) with a x + b y = gcd(a, b).
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

}  // namespace greenbound::detail
