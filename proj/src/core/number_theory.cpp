#include "csdlab/number_theory.hpp"

#include <numeric>

namespace csdlab::nt {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::optional<std::int64_t> multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 1 || std::gcd(a, m) != 1) return std::nullopt;
  if (m == 1) return 1;
  std::int64_t x = ((a % m) + m) % m;
  std::int64_t cur = x;
  for (std::int64_t k = 1; k <= m; ++k) {
    if (cur == 1) return k;
    cur = static_cast<std::int64_t>(static_cast<__int128>(cur) * x % m);
  }
  return std::nullopt;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) return std::nullopt;
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return m == 1 ? std::optional<std::int64_t>(0) : std::nullopt;
  return ((old_s % m) + m) % m;
}

std::optional<PrimePower> as_prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  const auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  int k = 0;
  while (n > 1) {
    n /= primes.front();
    ++k;
  }
  return PrimePower{primes.front(), k};
}

}  // namespace csdlab::nt
