#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

// Transition semigroup of an automaton: every transformation induced by a
// nonempty word, with the length of a shortest inducing word. Entries are in
// breadth-first order (nondecreasing lengths), transformations packed 4 bits
// per state.
struct SemigroupTable {
  int n = 0;
  bool complete = true;  // false when the cap stopped the closure
  std::vector<std::pair<uint64_t, uint32_t>> entries;
};

uint64_t pack_transformation(const Transformation& t);
Transformation unpack_transformation(uint64_t key, int n);

// Breadth-first closure of the letters under composition. Stops early after
// `cap` entries; lengths recorded up to that point stay exact.
SemigroupTable enumerate_semigroup(const Automaton& a, uint64_t cap);

// Least one-cluster reset bound over the table: for every transformation
// whose functional graph is connected with cycle length >= 2, evaluate the
// one-cluster bound at its shortest word length. Empty when no entry
// qualifies. A partial table still yields a valid bound. When stop_below is
// positive the scan may return any qualifying value below it immediately.
std::optional<int64_t> one_cluster_scan(const Automaton& a,
                                        const SemigroupTable& table,
                                        int64_t stop_below = 0);

// True when some letter is induced by a word over the other letters, so the
// same semigroup arises from a proper subset of the letters. A closure cut
// off by the cap counts as not reducible (the safe direction). Single-letter
// automata are never reducible.
bool is_reducible_generating_set(const Automaton& a, uint64_t cap);

}  // namespace resetsearch
