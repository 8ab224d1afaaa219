#pragma once

#include <cstddef>

namespace csdlab {

inline constexpr std::size_t kDefaultMaxOrder = 512;
inline constexpr std::size_t kDefaultMaxLatticeOrder = 256;
inline constexpr std::size_t kDefaultMaxSectionsOrder = 128;

// Size guardrails. Each level multiplies cost combinatorially, so the
// full-lattice and section limits are tighter than the group-order limit.
struct Limits {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_lattice_order = kDefaultMaxLatticeOrder;
  std::size_t max_sections_order = kDefaultMaxSectionsOrder;
};

void check_order(std::size_t order, const Limits& limits);
void check_lattice_order(std::size_t order, const Limits& limits);
void check_sections_order(std::size_t order, const Limits& limits);

}  // namespace csdlab
