#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "csdlab/element_set.hpp"

namespace csdlab {

inline constexpr Elem kIdentity = 0;

// An immutable finite group stored as a Cayley table over the dense indices
// 0..order-1. Index 0 is always the identity. Copies share the table.
class FiniteGroup {
 public:
  // Builds a group from a row-major table (table[a * order + b] = a*b).
  // Checks that 0 is a two-sided identity and every row and column is a
  // permutation; associativity is only checked by validate().
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table, std::string label);

  std::size_t order() const noexcept { return data_->order; }

  // Unchecked product for inner loops.
  Elem product(Elem a, Elem b) const noexcept { return data_->table[a * data_->order + b]; }
  // Checked product; throws InvalidArgument for out-of-range indices.
  Elem mul(Elem a, Elem b) const;

  Elem inverse(Elem a) const noexcept { return data_->inverse[a]; }
  std::uint32_t element_order(Elem a) const noexcept { return data_->elem_order[a]; }
  Elem power(Elem a, std::int64_t k) const;

  std::span<const Elem> table() const noexcept { return data_->table; }
  std::span<const Elem> row(Elem a) const noexcept {
    return std::span<const Elem>(data_->table).subspan(a * data_->order, data_->order);
  }
  std::span<const Elem> inverses() const noexcept { return data_->inverse; }
  std::span<const std::uint32_t> element_orders() const noexcept { return data_->elem_order; }

  const std::string& label() const noexcept { return data_->label; }
  FiniteGroup with_label(std::string label) const;

  // Identifies the underlying table; shared by copies.
  std::uint64_t id() const noexcept { return data_->id; }

  ElementSet all_elements() const { return ElementSet::full(order()); }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> elem_order;
    std::string label;
    std::uint64_t id = 0;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Full Cayley-table validation (identity, inverses, Latin square,
// associativity, Lagrange on element orders). Throws InvalidArgument.
void validate(const FiniteGroup& g);

// Relabels elements: new index of old element a is mapping[a]. mapping must
// be a permutation of 0..order-1 fixing 0.
FiniteGroup relabel(const FiniteGroup& g, std::span<const Elem> mapping);

}  // namespace csdlab
