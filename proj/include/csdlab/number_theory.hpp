#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace csdlab::nt {

bool is_prime(std::int64_t n);

// Distinct prime divisors, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Least k >= 1 with a^k = 1 (mod m); nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> multiplicative_order(std::int64_t a, std::int64_t m);

// Inverse of a modulo m; nullopt when it does not exist.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

// n = p^k with k >= 1; nullopt otherwise.
std::optional<PrimePower> as_prime_power(std::int64_t n);

}  // namespace csdlab::nt
