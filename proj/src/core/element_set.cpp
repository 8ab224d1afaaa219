#include "csdlab/element_set.hpp"

namespace csdlab {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<Elem>(e));
  return s;
}

std::size_t ElementSet::count() const noexcept {
  return simd::active_kernels().popcount(words_.data(), words_.size());
}

bool ElementSet::empty() const noexcept {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  simd::active_kernels().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  simd::active_kernels().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  return simd::active_kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

std::size_t ElementSet::intersection_count(const ElementSet& other) const noexcept {
  return simd::active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
}

bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
  return a.universe_ == b.universe_ &&
         simd::active_kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // FNV-1a over words
  std::uint64_t h = 1469598103934665603ULL;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool lex_less(const ElementSet& a, const ElementSet& b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    const simd::Word diff = wa[i] ^ wb[i];
    if (diff != 0) {
      const simd::Word lowest = diff & (~diff + 1);
      return (wa[i] & lowest) != 0;
    }
  }
  return wa.size() < wb.size();
}

}  // namespace csdlab
