#include "csdlab/groups.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "csdlab/errors.hpp"
#include "csdlab/number_theory.hpp"

namespace csdlab {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

// Order check before allocating a table; parameters may be large enough that
// the product overflows, so compare in stages.
void check_planned_order(long double order, const Limits& limits) {
  if (order > static_cast<long double>(limits.max_order)) {
    const auto requested = order > 1e18L ? std::size_t(-1) : static_cast<std::size_t>(order);
    throw GuardrailError("max-order", limits.max_order, requested);
  }
}

// Split metacyclic extension: elements x^i y^j (0 <= i < a, 0 <= j < b) with
// y x y^-1 = x^u and y^b = x^s. Requires u^b = 1 and s*u = s (mod a).
// Product: x^i y^j * x^k y^l = x^{i + k u^j + s [j+l >= b]} y^{(j+l) mod b}.
FiniteGroup metacyclic(std::int64_t a, std::int64_t b, std::int64_t u, std::int64_t s,
                       std::string label) {
  const std::size_t n = static_cast<std::size_t>(a * b);
  std::vector<std::int64_t> u_pow(static_cast<std::size_t>(b));
  u_pow[0] = 1;
  for (std::int64_t j = 1; j < b; ++j) u_pow[j] = mod(u_pow[j - 1] * u, a);
  std::vector<Elem> table(n * n);
  for (std::int64_t j = 0; j < b; ++j) {
    for (std::int64_t i = 0; i < a; ++i) {
      const std::size_t left = static_cast<std::size_t>(i + a * j);
      for (std::int64_t l = 0; l < b; ++l) {
        const bool wraps = j + l >= b;
        for (std::int64_t k = 0; k < a; ++k) {
          const std::int64_t xi = mod(i + k * u_pow[j] + (wraps ? s : 0), a);
          const std::int64_t yj = (j + l) % b;
          table[left * n + static_cast<std::size_t>(k + a * l)] = static_cast<Elem>(xi + a * yj);
        }
      }
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(label));
}

// Z_p^k as coordinate vectors in base p; index = sum v_i p^i.
std::vector<std::int64_t> digits(std::int64_t value, std::int64_t p, int k) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

}  // namespace

FiniteGroup from_generators(std::size_t degree, std::span<const Permutation> gens, const Limits& limits) {
  for (const auto& g : gens) {
    require(g.degree() == degree, "generator degree differs from the stated degree");
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> index{{elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation y = elements[i] * s;
      if (index.find(y) == index.end()) {
        if (elements.size() + 1 > limits.max_order) {
          throw GuardrailError("max-order", limits.max_order, elements.size() + 1);
        }
        index.emplace(y, static_cast<Elem>(elements.size()));
        elements.push_back(std::move(y));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(elements[a] * elements[b]);
  }
  std::string label = "Perm(" + std::to_string(degree) + ";";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    label += (i == 0 ? " " : ", ") + gens[i].to_cycle_string();
  }
  label += ")";
  return FiniteGroup::from_table(n, std::move(table), std::move(label));
}

FiniteGroup cyclic(int n, const Limits& limits) {
  require(n >= 1, "cyclic group order must be >= 1");
  check_planned_order(n, limits);
  return metacyclic(n, 1, 1, 0, "Z(" + std::to_string(n) + ")");
}

FiniteGroup elementary_abelian(int p, int k, const Limits& limits) {
  require(nt::is_prime(p), "elementary abelian group needs a prime p");
  require(k >= 1, "elementary abelian rank must be >= 1");
  check_planned_order(std::pow(static_cast<long double>(p), k), limits);
  const std::int64_t n = ipow(p, k);
  std::vector<Elem> table(static_cast<std::size_t>(n * n));
  for (std::int64_t a = 0; a < n; ++a) {
    const auto da = digits(a, p, k);
    for (std::int64_t b = 0; b < n; ++b) {
      const auto db = digits(b, p, k);
      std::int64_t c = 0;
      for (int i = k - 1; i >= 0; --i) c = c * p + (da[i] + db[i]) % p;
      table[static_cast<std::size_t>(a * n + b)] = static_cast<Elem>(c);
    }
  }
  return FiniteGroup::from_table(static_cast<std::size_t>(n), std::move(table),
                                 "Ea(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteGroup dihedral(int m, const Limits& limits) {
  require(m >= 2, "dihedral group needs m >= 2 (order 2m >= 4)");
  check_planned_order(2.0L * m, limits);
  return metacyclic(m, 2, m - 1, 0, "D(" + std::to_string(2 * m) + ")");
}

FiniteGroup generalized_quaternion(int n, const Limits& limits) {
  require(n >= 3, "generalized quaternion group needs n >= 3 (order >= 8)");
  check_planned_order(std::pow(2.0L, n), limits);
  const std::int64_t a = ipow(2, n - 1);
  return metacyclic(a, 2, a - 1, a / 2, "Q(" + std::to_string(2 * a) + ")");
}

FiniteGroup quasidihedral(int n, const Limits& limits) {
  require(n >= 4, "quasi-dihedral group needs n >= 4 (order >= 16)");
  check_planned_order(std::pow(2.0L, n), limits);
  const std::int64_t a = ipow(2, n - 1);
  // x^{2^{n-2}-1} is an involutive automorphism, so the conjugation by y and
  // by y^-1 coincide.
  return metacyclic(a, 2, a / 2 - 1, 0, "SD(" + std::to_string(2 * a) + ")");
}

FiniteGroup modular_group_M(int p, int n, const Limits& limits) {
  require(nt::is_prime(p), "modular group M(p^n) needs a prime p");
  require(n >= 3 && (p != 2 || n >= 4), "modular group M(p^n) needs n >= 3 (n >= 4 for p = 2)");
  check_planned_order(std::pow(static_cast<long double>(p), n), limits);
  const std::int64_t a = ipow(p, n - 1);
  const std::int64_t t = 1 + ipow(p, n - 2);  // y^-1 x y = x^t
  const std::int64_t u = *nt::mod_inverse(t, a);
  return metacyclic(a, p, u, 0, "M(" + std::to_string(a * p) + ")");
}

int p_group_exponent(int p, int q) {
  for (int r = 2; r < p; ++r) {
    if (nt::multiplicative_order(r, p) == q) return r;
  }
  throw InvalidArgument("no element of order " + std::to_string(q) + " modulo " + std::to_string(p));
}

FiniteGroup p_group_P(int n, int p, int q, const Limits& limits) {
  require(nt::is_prime(p) && p > 2, "P-group G_{n,p} needs an odd prime p");
  require(nt::is_prime(q) && (p - 1) % q == 0, "P-group needs a prime q dividing p - 1");
  return p_group_P_with_exponent(n, p, q, p_group_exponent(p, q), limits);
}

FiniteGroup p_group_P_with_exponent(int n, int p, int q, int r, const Limits& limits) {
  require(nt::is_prime(p) && p > 2, "P-group G_{n,p} needs an odd prime p");
  require(n >= 2, "P-group needs n >= 2");
  require(nt::is_prime(q) && (p - 1) % q == 0, "P-group needs a prime q dividing p - 1");
  require(nt::multiplicative_order(r, p) == q, "exponent r must have order q modulo p");
  check_planned_order(std::pow(static_cast<long double>(p), n - 1) * q, limits);

  const int k = n - 1;
  const std::int64_t m = ipow(p, k);
  const std::size_t order = static_cast<std::size_t>(m * q);
  // x^-1 w x = w^r, hence x^j w x^-j = w^{r^-j}.
  const std::int64_t r_inv = *nt::mod_inverse(r, p);
  std::vector<std::int64_t> act(static_cast<std::size_t>(q));
  act[0] = 1;
  for (int j = 1; j < q; ++j) act[j] = act[j - 1] * r_inv % p;

  std::vector<std::vector<std::int64_t>> vec(static_cast<std::size_t>(m));
  for (std::int64_t v = 0; v < m; ++v) vec[v] = digits(v, p, k);

  std::vector<Elem> table(order * order);
  for (std::int64_t j = 0; j < q; ++j) {
    for (std::int64_t v = 0; v < m; ++v) {
      const std::size_t left = static_cast<std::size_t>(v + m * j);
      for (std::int64_t l = 0; l < q; ++l) {
        for (std::int64_t w = 0; w < m; ++w) {
          std::int64_t c = 0;
          for (int i = k - 1; i >= 0; --i) c = c * p + (vec[v][i] + vec[w][i] * act[j]) % p;
          table[left * order + static_cast<std::size_t>(w + m * l)] =
              static_cast<Elem>(c + m * ((j + l) % q));
        }
      }
    }
  }
  return FiniteGroup::from_table(order, std::move(table),
                                 "P(" + std::to_string(n) + "," + std::to_string(p) + "," +
                                     std::to_string(q) + ")");
}

FiniteGroup zm_group(int m, int n, int r, const Limits& limits) {
  require(m >= 1 && n >= 1, "ZM group needs m, n >= 1");
  require(nt::pow_mod(r, n, m) == 1 % m, "ZM group needs r^n = 1 (mod m)");
  require(std::gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n) * (r - 1)) == 1,
          "ZM group needs gcd(m, n(r - 1)) = 1");
  check_planned_order(static_cast<long double>(m) * n, limits);
  return metacyclic(m, n, mod(r, m), 0,
                    "ZM(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")");
}

FiniteGroup heisenberg_E(int p, const Limits& limits) {
  require(nt::is_prime(p) && p > 2, "E(p^3) needs an odd prime p");
  check_planned_order(std::pow(static_cast<long double>(p), 3), limits);
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  // (a, b, c) ~ [[1, a, c], [0, 1, b], [0, 0, 1]], index a + p b + p^2 c.
  auto index = [p](std::int64_t a, std::int64_t b, std::int64_t c) {
    return static_cast<Elem>(a + p * b + static_cast<std::int64_t>(p) * p * c);
  };
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::int64_t a = x % p, b = (x / p) % p, c = x / (p * p);
    for (std::size_t y = 0; y < n; ++y) {
      const std::int64_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      table[x * n + y] = index((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    }
  }
  return FiniteGroup::from_table(n, std::move(table), "E(" + std::to_string(n) + ")");
}

FiniteGroup symmetric_group(int n, const Limits& limits) {
  require(n >= 1 && n <= 7, "symmetric group S(n) needs 1 <= n <= 7");
  check_planned_order(std::round(std::tgamma(n + 1.0L)), limits);
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::parse(n, "(0 1)"));
    std::vector<std::uint32_t> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.emplace_back(std::move(rot));
  }
  return from_generators(n, gens, limits).with_label("S(" + std::to_string(n) + ")");
}

FiniteGroup alternating_group(int n, const Limits& limits) {
  require(n >= 1 && n <= 7, "alternating group A(n) needs 1 <= n <= 7");
  check_planned_order(n >= 2 ? std::round(std::tgamma(n + 1.0L) / 2) : 1.0L, limits);
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(Permutation::parse(n, "(0 1 2)"));
    // A_n = <(0 1 2), (0 1 ... n-1)> for odd n, <(0 1 2), (1 2 ... n-1)> for even n.
    std::vector<std::uint32_t> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>(i);
    const int start = n % 2 == 1 ? 0 : 1;
    for (int i = start; i < n; ++i) cyc[i] = static_cast<std::uint32_t>(i + 1 < n ? i + 1 : start);
    gens.emplace_back(std::move(cyc));
  }
  return from_generators(n, gens, limits).with_label("A(" + std::to_string(n) + ")");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t ng = g.order(), nh = h.order();
  check_planned_order(static_cast<long double>(ng) * nh, limits);
  const std::size_t n = ng * nh;
  std::vector<Elem> table(n * n);
  for (std::size_t a1 = 0; a1 < ng; ++a1) {
    for (std::size_t b1 = 0; b1 < nh; ++b1) {
      const std::size_t left = a1 * nh + b1;
      for (std::size_t a2 = 0; a2 < ng; ++a2) {
        const std::size_t a = g.product(static_cast<Elem>(a1), static_cast<Elem>(a2));
        for (std::size_t b2 = 0; b2 < nh; ++b2) {
          table[left * n + a2 * nh + b2] =
              static_cast<Elem>(a * nh + h.product(static_cast<Elem>(b1), static_cast<Elem>(b2)));
        }
      }
    }
  }
  return FiniteGroup::from_table(n, std::move(table), g.label() + "x" + h.label());
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  require_same_group(g, n);
  if (!is_normal(g, n)) throw InvalidArgument("quotient by a subgroup that is not normal");
  const auto members = n.members().members();
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> coset_of(g.order(), kUnassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members) coset_of[g.product(x, m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset_of[g.product(reps[i], reps[j])];
  }
  return FiniteGroup::from_table(k, std::move(table),
                                 g.label() + "/N" + std::to_string(n.size()));
}

Subgroup center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.product(a, b) == g.product(b, a);
    if (central) z.insert(a);
  }
  return Subgroup::trusted(g, std::move(z));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  ElementSet commutators(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      commutators.insert(g.product(g.product(g.inverse(a), g.inverse(b)), g.product(a, b)));
    }
  }
  const auto gens = commutators.members();
  return generate(g, gens);
}

bool is_abelian(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (g.product(a, b) != g.product(b, a)) return false;
    }
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g) {
  for (std::int64_t p : nt::prime_divisors(static_cast<std::int64_t>(g.order()))) {
    std::vector<Elem> p_elements;
    ElementSet is_p(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      std::uint32_t o = g.element_order(a);
      while (o % p == 0) o /= static_cast<std::uint32_t>(p);
      if (o == 1) {
        p_elements.push_back(a);
        is_p.insert(a);
      }
    }
    for (Elem a : p_elements) {
      for (Elem b : p_elements) {
        if (!is_p.contains(g.product(a, b))) return false;
      }
    }
  }
  return true;
}

}  // namespace csdlab
