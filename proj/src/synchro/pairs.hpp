#pragma once

#include <utility>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

// Shortest merge lengths for unordered state pairs. height(x, y) is the
// length of a shortest word sending x and y to the same state, or -1 when no
// word does. It satisfies height{x,y} = 1 + min over letters of height of the
// image pair, with already-merged images counting as 0.
struct PairTable {
  int n = 0;
  std::vector<int16_t> height;  // n*n entries, indexed x*n+y with x < y

  int height_of(int x, int y) const {
    if (x > y) std::swap(x, y);
    return height[x * n + y];
  }
  bool compressible(int x, int y) const { return height_of(x, y) >= 0; }

  std::vector<std::pair<int, int>> compressible_list() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (height[x * n + y] >= 0) out.emplace_back(x, y);
    return out;
  }
};

PairTable compressible_pairs(const Automaton& a);

// Largest pair height, 0 when nothing is compressible.
int sync_height(const PairTable& t);

// Every pair compressible (always true for a single state).
bool is_synchronizing(const Automaton& a);

}  // namespace resetsearch
