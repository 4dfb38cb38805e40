#pragma once

#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

// Exact synchronization data from a breadth-first search over state subsets.
struct SyncAnalysis {
  bool synchronizing = false;
  // Length of a shortest reset word; -1 when not synchronizing.
  int reset_length = -1;
  // Lexicographically least shortest reset word (letter indices); empty when
  // not synchronizing or when the automaton has a single state.
  std::vector<uint8_t> reset_word;
  // Least image size over all words (the empty word included).
  int min_rank = 0;
  // Length of a shortest word reaching min_rank.
  int min_rank_word_length = 0;
};

SyncAnalysis reset_analysis(const Automaton& a);

// True when removing any single letter breaks synchronization. A one-letter
// synchronizing automaton counts as irreducible. Throws std::invalid_argument
// on non-synchronizing input.
bool is_irreducibly_synchronizing(const Automaton& a);

}  // namespace resetsearch
