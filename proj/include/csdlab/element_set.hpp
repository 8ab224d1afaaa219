#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "csdlab/simd/kernels.hpp"

namespace csdlab {

using Elem = std::uint32_t;

// Dense bitset over the element indices 0..universe-1 of one group.
// Set algebra goes through the active SIMD kernel table.
class ElementSet {
 public:
  using Word = simd::Word;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  void insert(Elem e) noexcept { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
  void erase(Elem e) noexcept { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }
  bool contains(Elem e) const noexcept {
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  bool is_subset_of(const ElementSet& other) const noexcept;
  std::size_t intersection_count(const ElementSet& other) const noexcept;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept;

  // Calls f(e) for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Elem>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> members() const;
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

// Orders by ascending member sequence: the set holding the smallest element
// of the symmetric difference comes first.
bool lex_less(const ElementSet& a, const ElementSet& b) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace csdlab
