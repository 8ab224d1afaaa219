#include "csdlab/simd/kernels.hpp"

#include <bit>

namespace csdlab::simd {
namespace {

void or_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

std::size_t popcount(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool equal(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::size_t count_equal_u32(const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += a[i] == b[i] ? 1 : 0;
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static constexpr KernelTable table{
      "scalar", &or_into, &and_into, &popcount, &and_popcount,
      &equal,   &is_subset, &count_equal_u32,
  };
  return table;
}

}  // namespace csdlab::simd
