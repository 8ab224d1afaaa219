#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace csdlab::simd {

using Word = std::uint64_t;

// Word-parallel kernels over dense bitsets and element-index arrays.
// Every entry has a scalar reference implementation; vectorized variants
// must produce identical results for every input.
struct KernelTable {
  std::string_view name;

  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= src
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  // popcount(a & b)
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
  // a is a subset of b
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  // number of positions i with a[i] == b[i]
  std::size_t (*count_equal_u32)(const std::uint32_t* a, const std::uint32_t* b,
                                 std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the library. Chosen once on first use: AVX2 when
// available, scalar otherwise. The environment variable CSDLAB_SIMD=scalar
// forces the scalar path.
const KernelTable& active_kernels();

// Overrides the active table ("scalar", "avx2", or "auto"). Returns false if
// the requested variant is unavailable. Not thread-safe against concurrent
// kernel use; call before starting work.
bool select_kernels(std::string_view name);

}  // namespace csdlab::simd
