#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "nbcolor/graph.hpp"

namespace nbcolor {

/// Total vertex coloring with colors in {1, ..., palette_size}.
struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;

  Coloring() = default;
  explicit Coloring(std::vector<int> c) : colors(std::move(c)) {
    palette_size = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
  }
  Coloring(std::vector<int> c, int k) : colors(std::move(c)), palette_size(k) {}

  int operator[](Vertex v) const { return colors.at(v); }
  std::size_t size() const noexcept { return colors.size(); }

  int max_color() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()); }

  std::size_t distinct_colors() const { return std::set<int>(colors.begin(), colors.end()).size(); }

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colors == b.colors; }
};

/// Consecutive block of colors {first, ..., first + size - 1}.
struct Palette {
  int first = 1;
  int size = 1;

  int last() const noexcept { return first + size - 1; }
  /// Maps rank r in {1..size} to its palette color; order preserving.
  int color(int rank) const noexcept { return first + rank - 1; }
  bool contains(int c) const noexcept { return c >= first && c <= last(); }
};

}  // namespace nbcolor
