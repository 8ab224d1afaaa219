#pragma once

#include <cstddef>
#include <span>

#include "csdlab/finite_group.hpp"
#include "csdlab/limits.hpp"
#include "csdlab/permutation.hpp"
#include "csdlab/subgroup.hpp"

namespace csdlab {

// Closure of the generators under composition. Elements are indexed in
// breadth-first discovery order from the identity, multiplying on the right
// by each generator in turn.
FiniteGroup from_generators(std::size_t degree, std::span<const Permutation> gens,
                            const Limits& limits = {});

// Z_n.
FiniteGroup cyclic(int n, const Limits& limits = {});
// Z_p^k.
FiniteGroup elementary_abelian(int p, int k, const Limits& limits = {});

// D_{2m} = <x, y | x^m = y^2 = 1, yxy = x^-1>, order 2m. Element x^i y^j
// has index i + m*j.
FiniteGroup dihedral(int m, const Limits& limits = {});

// Q_{2^n} = <x, y | x^{2^{n-1}} = 1, y^2 = x^{2^{n-2}}, yxy^-1 = x^-1>, n >= 3.
FiniteGroup generalized_quaternion(int n, const Limits& limits = {});

// S_{2^n} = <x, y | x^{2^{n-1}} = y^2 = 1, y^-1 x y = x^{2^{n-2}-1}>, n >= 4.
FiniteGroup quasidihedral(int n, const Limits& limits = {});

// M(p^n) = <x, y | x^{p^{n-1}} = y^p = 1, y^-1 x y = x^{1+p^{n-2}}>;
// n >= 3, and n >= 4 when p = 2.
FiniteGroup modular_group_M(int p, int n, const Limits& limits = {});

// Z_p^{n-1} ⋊ Z_q where the generator x acts by x^-1 y x = y^r and r is the
// smallest integer > 1 of multiplicative order q mod p. Requires p odd
// prime, n >= 2, q prime dividing p - 1.
FiniteGroup p_group_P(int n, int p, int q, const Limits& limits = {});

// Same construction with an explicit exponent r (order q mod p).
FiniteGroup p_group_P_with_exponent(int n, int p, int q, int r, const Limits& limits = {});

// Smallest r > 1 with multiplicative order q mod p.
int p_group_exponent(int p, int q);

// <a, b | a^m = b^n = 1, b a b^-1 = a^r> with r^n = 1 (mod m) and
// gcd(m, n(r-1)) = 1. Element a^i b^j has index i + m*j.
FiniteGroup zm_group(int m, int n, int r, const Limits& limits = {});

// Upper unitriangular 3x3 matrices over F_p (p odd): non-abelian of order
// p^3 and exponent p.
FiniteGroup heisenberg_E(int p, const Limits& limits = {});

// Permutation groups on {0..n-1}.
FiniteGroup symmetric_group(int n, const Limits& limits = {});
FiniteGroup alternating_group(int n, const Limits& limits = {});

// Componentwise product; (a, b) has index a*|h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

// G/N with cosets indexed by their minimal member, ascending. Throws
// InvalidArgument if n is not normal.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// For each prime p dividing |G|, the p-elements must be closed under the
// product (all Sylow subgroups normal).
bool is_nilpotent(const FiniteGroup& g);

}  // namespace csdlab
