#pragma once

#include <initializer_list>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch::testing {

inline Automaton make(int n, int k, std::initializer_list<int> delta) {
  return make_automaton(n, k, std::vector<int>(delta));
}

// Rotation letter plus a single bump at state 0. Shortest reset word has
// length (n-1)^2.
inline Automaton cerny(int n) {
  std::vector<int> delta;
  for (int q = 0; q < n; ++q) delta.push_back((q + 1) % n);
  for (int q = 0; q < n; ++q) delta.push_back(q == 0 ? 1 : q);
  return make_automaton(n, 2, delta);
}

}  // namespace resetsearch::testing
