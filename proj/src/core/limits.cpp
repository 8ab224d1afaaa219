#include "csdlab/limits.hpp"

#include "csdlab/errors.hpp"

namespace csdlab {

void check_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_order) throw GuardrailError("max-order", limits.max_order, order);
}

void check_lattice_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_lattice_order) {
    throw GuardrailError("max-lattice-order", limits.max_lattice_order, order);
  }
}

void check_sections_order(std::size_t order, const Limits& limits) {
  if (order > limits.max_sections_order) {
    throw GuardrailError("max-sections-order", limits.max_sections_order, order);
  }
}

}  // namespace csdlab
