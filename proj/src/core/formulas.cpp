#include "csdlab/formulas.hpp"

#include "csdlab/errors.hpp"
#include "csdlab/number_theory.hpp"

namespace csdlab::formulas {
namespace {

BigInt big_pow(std::int64_t base, std::int64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// 1 + p + ... + p^k; zero for k < 0.
BigInt geometric(std::int64_t p, std::int64_t k) {
  BigInt sum = 0, term = 1;
  for (std::int64_t i = 0; i <= k; ++i) {
    sum += term;
    term *= p;
  }
  return sum;
}

FormulaResult make(const BigInt& num, const BigInt& den, std::string family,
                   std::vector<std::int64_t> params) {
  return FormulaResult{Degree(num, den), std::move(family), std::move(params)};
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace

std::int64_t tau(std::int64_t m) {
  require(m >= 1, "tau needs m >= 1");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) count += (d * d == m) ? 1 : 2;
  }
  return count;
}

Degree iwasawa_threshold() { return Degree(41, 49); }
Degree nilpotent_threshold() { return Degree(19, 25); }

FormulaResult csd_P_group(std::int64_t n, std::int64_t p) {
  require(nt::is_prime(p) && p > 2, "csd_P_group needs an odd prime p");
  require(n >= 2, "csd_P_group needs n >= 2");
  const BigInt below = geometric(p, n - 2);        // 1 + p + ... + p^{n-2}
  const BigInt cyclic = 1 + geometric(p, n - 1);   // 2 + p + ... + p^{n-1}
  const BigInt num = (1 + below) * cyclic + big_pow(p, n - 1) * (2 + below);
  return make(num, cyclic * cyclic, "pgroup", {n, p});
}

FormulaResult csd_dihedral(std::int64_t m) {
  require(m >= 2, "csd_dihedral needs m >= 2");
  const BigInt t = tau(m);
  const BigInt l1 = t + m;
  const BigInt reflection = t + (m % 2 == 0 ? 2 : 1);
  return make(t * l1 + m * reflection, l1 * l1, "dihedral", {m});
}

FormulaResult csd_dihedral_2n(std::int64_t n) {
  require(n >= 2, "csd_dihedral_2n needs n >= 2");
  const BigInt den = n + big_pow(2, n - 1);
  return make(BigInt(n) * n + (n + 1) * big_pow(2, n), den * den, "dihedral_2n", {n});
}

FormulaResult csd_quaternion(std::int64_t n) {
  require(n >= 3, "csd_quaternion needs n >= 3");
  const BigInt den = n + big_pow(2, n - 2);
  return make(BigInt(n) * n + (n + 1) * big_pow(2, n - 1), den * den, "quaternion", {n});
}

FormulaResult csd_semidihedral(std::int64_t n) {
  require(n >= 4, "csd_semidihedral needs n >= 4");
  const BigInt den = n + 3 * big_pow(2, n - 3);
  const BigInt num = BigInt(n) * n + 3 * n * big_pow(2, n - 2) + 5 * big_pow(2, n - 3);
  return make(num, den * den, "semidihedral", {n});
}

FormulaResult csd_E_p3(std::int64_t p) {
  require(nt::is_prime(p) && p > 2, "csd_E_p3 needs an odd prime p");
  const BigInt bp = p;
  const BigInt den = bp * bp + bp + 2;
  auto result = make(bp * bp * bp + 5 * bp * bp + 4 * bp + 4, den * den, "ep3", {p});
  if (!(result.value < iwasawa_threshold())) {
    throw InternalError("csd(E(p^3)) is not below 41/49 for p = " + std::to_string(p));
  }
  return result;
}

FormulaResult csd_schmidt_section(std::int64_t p, std::int64_t r) {
  require(r >= 1, "csd_schmidt_section needs r >= 1");
  require(nt::is_prime(p), "csd_schmidt_section needs a prime p");
  require(r >= 2 || p > 2, "r = 1 needs a prime q dividing p - 1, so p must be odd");
  FormulaResult result = [&] {
    if (r == 1) {
      const BigInt den = p + 2;
      return make(BigInt(5 * p + 4), den * den, "schmidt", {p, r});
    }
    const BigInt num = big_pow(p, 2 * r) + 3 * big_pow(p, r + 2) - 4 * big_pow(p, r + 1) -
                       big_pow(p, r) + BigInt(p) * p - 4 * p + 4;
    const BigInt den = big_pow(p, r + 1) + p - 2;
    return make(num, den * den, "schmidt", {p, r});
  }();
  if (result.value > nilpotent_threshold()) {
    throw InternalError("Schmidt section value " + result.value.to_string() + " exceeds 19/25");
  }
  return result;
}

ZnQ8Bound csd_lower_bound_Zn_Q8(std::int64_t n) {
  require(n >= 2, "csd_lower_bound_Zn_Q8 needs n >= 2");
  const BigInt l1 = 8 * n + 2;
  const BigInt den = l1 * l1;
  return ZnQ8Bound{make(den - 24 * (n + 2), den, "zq8bound", {n}), 8 * n + 2};
}

}  // namespace csdlab::formulas
