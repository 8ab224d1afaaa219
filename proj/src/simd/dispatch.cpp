#include <atomic>
#include <cstdlib>
#include <string_view>

#include "csdlab/simd/kernels.hpp"

namespace csdlab::simd {

#if defined(CSDLAB_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(CSDLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelTable& best_available() {
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

const KernelTable* initial_choice() {
  const char* env = std::getenv("CSDLAB_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
  return &best_available();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_choice()};
  return slot;
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(CSDLAB_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  return *active_slot().load(std::memory_order_acquire);
}

bool select_kernels(std::string_view name) {
  const KernelTable* choice = nullptr;
  if (name == "scalar") {
    choice = &scalar_kernels();
  } else if (name == "avx2") {
    choice = avx2_kernels();
  } else if (name == "auto") {
    choice = &best_available();
  }
  if (choice == nullptr) return false;
  active_slot().store(choice, std::memory_order_release);
  return true;
}

}  // namespace csdlab::simd
