#include "csdlab/finite_group.hpp"

#include <atomic>

#include "csdlab/errors.hpp"

namespace csdlab {
namespace {

std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::string label) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  if (table.size() != order * order) throw InvalidArgument("Cayley table has wrong size");

  auto data = std::make_shared<Data>();
  data->order = order;
  data->table = std::move(table);
  data->label = std::move(label);
  data->id = next_group_id();
  const auto& t = data->table;

  for (Elem v : t) {
    if (v >= order) throw InvalidArgument("Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < order; ++a) {
    if (t[a] != a || t[a * order] != a) throw InvalidArgument("index 0 is not the identity");
  }
  std::vector<bool> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[t[a * order + b]]) throw InvalidArgument("Cayley table row is not a permutation");
      seen[t[a * order + b]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[t[b * order + a]]) throw InvalidArgument("Cayley table column is not a permutation");
      seen[t[b * order + a]] = true;
    }
  }

  data->inverse.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (t[a * order + b] == kIdentity) {
        data->inverse[a] = static_cast<Elem>(b);
        break;
      }
    }
  }

  data->elem_order.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::uint32_t k = 1;
    Elem cur = static_cast<Elem>(a);
    while (cur != kIdentity) {
      cur = t[cur * order + a];
      ++k;
      if (k > order) throw InvalidArgument("element of unbounded order");
    }
    data->elem_order[a] = k;
  }

  return FiniteGroup(std::move(data));
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (a >= order() || b >= order()) throw InvalidArgument("element index out of range");
  return product(a, b);
}

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  const std::int64_t n = element_order(a);
  k %= n;
  if (k < 0) k += n;
  Elem result = kIdentity;
  for (std::int64_t i = 0; i < k; ++i) result = product(result, a);
  return result;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

void validate(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.product(kIdentity, a) != a || g.product(a, kIdentity) != a) {
      throw InvalidArgument(g.label() + ": identity law fails");
    }
    if (g.product(a, g.inverse(a)) != kIdentity || g.product(g.inverse(a), a) != kIdentity) {
      throw InvalidArgument(g.label() + ": inverse law fails");
    }
    if (n % g.element_order(a) != 0) throw InvalidArgument(g.label() + ": element order violates Lagrange");
  }
  for (Elem a = 0; a < n; ++a) {
    const auto row_a = g.row(a);
    for (Elem b = 0; b < n; ++b) {
      const auto row_ab = g.row(row_a[b]);
      const auto row_b = g.row(b);
      for (Elem c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) throw InvalidArgument(g.label() + ": associativity fails");
      }
    }
  }
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Elem> mapping) {
  const std::size_t n = g.order();
  if (mapping.size() != n || mapping[0] != kIdentity) {
    throw InvalidArgument("relabel mapping must cover every element and fix the identity");
  }
  std::vector<bool> seen(n, false);
  for (Elem m : mapping) {
    if (m >= n || seen[m]) throw InvalidArgument("relabel mapping is not a permutation");
    seen[m] = true;
  }
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[mapping[a] * n + mapping[b]] = mapping[g.product(a, b)];
  }
  return FiniteGroup::from_table(n, std::move(table), g.label());
}

}  // namespace csdlab
