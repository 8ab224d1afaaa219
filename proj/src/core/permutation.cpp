#include "csdlab/permutation.hpp"

#include <cctype>

#include "csdlab/errors.hpp"

namespace csdlab {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidArgument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw InvalidArgument("cycle notation \"" + std::string(text) + "\": " + what);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::uint64_t point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (point >= degree) fail("point out of range for degree " + std::to_string(degree));
        ++pos;
      }
      if (used[point]) fail("point " + std::to_string(point) + " repeated");
      used[point] = true;
      cycle.push_back(static_cast<std::uint32_t>(point));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("permutation degrees differ");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
      i = images_[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace csdlab
