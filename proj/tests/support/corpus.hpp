#pragma once

#include <string>
#include <vector>

namespace csdlab::testing {

// Group expressions whose full subgroup lattices are cheap to compute
// (orders up to 64). Used by the property suites.
const std::vector<std::string>& property_corpus();

// Pairs of expressions with coprime orders.
std::vector<std::pair<std::string, std::string>> coprime_pairs();

}  // namespace csdlab::testing
