#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csdlab/degree.hpp"

namespace csdlab::formulas {

// A closed-form value together with the family and parameters it came from.
struct FormulaResult {
  Degree value;
  std::string family;
  std::vector<std::int64_t> params;
};

// Number of positive divisors. Throws InvalidArgument for m < 1.
std::int64_t tau(std::int64_t m);

// csd(D_8) = 41/49; csd* above this certifies an Iwasawa group.
Degree iwasawa_threshold();
// csd(S_3) = 19/25; csd* above this certifies nilpotency.
Degree nilpotent_threshold();

// Non-abelian P-group G_{n,p} of order p^{n-1} q (the value does not depend
// on q). With s_k = 1 + p + ... + p^k and L = 1 + s_{n-1}:
//   ((1 + s_{n-2}) L + p^{n-1} (2 + s_{n-2})) / L^2.
FormulaResult csd_P_group(std::int64_t n, std::int64_t p);

// D_{2m}: (τ(τ+m) + m(τ+1)) / (τ+m)^2 for odd m, with τ+2 in place of τ+1
// for even m.
FormulaResult csd_dihedral(std::int64_t m);

// D_{2^n}: (n^2 + (n+1) 2^n) / (n + 2^{n-1})^2, n >= 2.
FormulaResult csd_dihedral_2n(std::int64_t n);

// Q_{2^n}: (n^2 + (n+1) 2^{n-1}) / (n + 2^{n-2})^2, n >= 3.
FormulaResult csd_quaternion(std::int64_t n);

// S_{2^n}: (n^2 + 3n 2^{n-2} + 5 2^{n-3}) / (n + 3 2^{n-3})^2, n >= 4.
FormulaResult csd_semidihedral(std::int64_t n);

// E(p^3): (p^3 + 5p^2 + 4p + 4) / (p^2 + p + 2)^2 for odd primes p.
// Checks the result is below csd(D_8) = 41/49.
FormulaResult csd_E_p3(std::int64_t p);

// Schmidt quotient Z_p^r ⋊ Z_q, r the order of p mod q:
//   r = 1:  (5p + 4) / (p + 2)^2
//   r >= 2: (p^{2r} + 3p^{r+2} - 4p^{r+1} - p^r + p^2 - 4p + 4) / (p^{r+1} + p - 2)^2
// Checks the result is at most 19/25; throws InternalError otherwise.
FormulaResult csd_schmidt_section(std::int64_t p, std::int64_t r);

// Lower bound for csd(Z_{2^n} x Q_8): 1 - 24(n+2) / (8n+2)^2, n >= 2.
struct ZnQ8Bound {
  FormulaResult bound;
  std::int64_t cyclic_count;  // |L_1(Z_{2^n} x Q_8)| = 8n + 2
};
ZnQ8Bound csd_lower_bound_Zn_Q8(std::int64_t n);

}  // namespace csdlab::formulas
