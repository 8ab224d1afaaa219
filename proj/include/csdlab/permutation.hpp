#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csdlab {

// A bijection of {0..degree-1}. Products compose left to right:
// (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  // Disjoint-cycle notation, fixed points omitted: "(0 1)(2 3)". The empty
  // string and "()" denote the identity. Throws InvalidArgument on malformed
  // text, points >= degree, or repeated points.
  static Permutation parse(std::size_t degree, std::string_view cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace csdlab
