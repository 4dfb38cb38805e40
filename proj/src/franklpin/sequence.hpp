#pragma once

#include <utility>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

// One item of a marked-set sequence: an m-subset M with a designated pair
// R inside it.
struct SequenceItem {
  uint32_t set = 0;  // bitmask of M
  std::pair<uint8_t, uint8_t> pair{0, 0};
};

// Sequence of m-subsets over {0..n-1} in the sense of Frankl and Pin: each
// item's pair lies in its own set and in no earlier set.
struct PairSequence {
  int n = 0;
  int m = 0;
  std::vector<SequenceItem> items;
};

// Upper limit C(n-m+2, 2) on the length of any such sequence.
int64_t frankl_limit(int n, int m);

bool validate_sequence(const PairSequence& s);

// Builds a sequence greedily from the given pair pool: repeatedly take the
// pair meeting the fewest other remaining pairs (ties: lexicographically
// least pair), then grow its set by states that complete no remaining pair
// (ties: fewest remaining pairs touching the state, then smallest index).
// Pairs whose set cannot reach size m are consumed without emitting an item.
PairSequence greedy_sequence(const std::vector<std::pair<int, int>>& pairs,
                             int m, int n);

// Merge data of a single transformation: the pairs that eventually map
// together, and the exact largest merge time.
struct UnaryPairStats {
  std::vector<std::pair<int, int>> pairs;
  int height = 0;
  int eventual_rank = 0;  // image size after the map stabilizes
};

UnaryPairStats unary_stats(const Transformation& t);

}  // namespace resetsearch
