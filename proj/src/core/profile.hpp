#pragma once

#include <optional>

#include "core/automaton.hpp"

namespace resetsearch {

// Shape of the functional graph of a single transformation.
struct OneClusterProfile {
  // True when the graph is connected, i.e. there is exactly one cycle.
  bool one_cluster = false;
  // Cycle length when one_cluster, 0 otherwise.
  int cycle_length = 0;
  // Least l with t^l(Q) equal to the set of cyclic states (max tail depth).
  int level = 0;
  // Bitmask of states lying on a cycle.
  uint32_t cycle = 0;
  // For a one-cluster map with level >= 1: the cycle state that all deepest
  // tail states reach after exactly `level` steps, when that state is unique.
  std::optional<int> tail_sink;
};

OneClusterProfile functional_profile(const Transformation& t);

}  // namespace resetsearch
