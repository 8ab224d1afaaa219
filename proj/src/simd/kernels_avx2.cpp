// Compiled with -mavx2 on x86-64. Only reached after a runtime CPU check.
#include "csdlab/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace csdlab::simd::detail {
namespace {

constexpr std::size_t kLane = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount (Mula et al.), accumulated with SAD into 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) Word lanes[kLane];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

std::size_t popcount(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) acc = _mm256_add_epi64(acc, popcount_epi64(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool equal(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLane <= words; i += kLane) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::size_t count_equal_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
  constexpr std::size_t kWidth = 8;
  // Each matching lane contributes -1; flush before the 32-bit lanes could overflow.
  std::size_t total = 0;
  std::size_t i = 0;
  constexpr std::size_t kFlushVectors = std::size_t{1} << 20;
  while (i + kWidth <= n) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t vectors = std::min((n - i) / kWidth, kFlushVectors);
    for (std::size_t v = 0; v < vectors; ++v, i += kWidth) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(va, vb));
    }
    alignas(32) std::uint32_t lanes[kWidth];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t lane : lanes) total += lane;
  }
  for (; i < n; ++i) total += a[i] == b[i] ? 1 : 0;
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{
      "avx2", &or_into, &and_into, &popcount, &and_popcount,
      &equal, &is_subset, &count_equal_u32,
  };
  return table;
}

}  // namespace csdlab::simd::detail
