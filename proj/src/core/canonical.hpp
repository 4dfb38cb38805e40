#pragma once

#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

// Serialized transition table (letter-major, n*k bytes) that is
// lexicographically least over all relabelings of states combined with all
// reorderings of letters. Two automata are isomorphic exactly when their
// canonical forms agree.
std::vector<uint8_t> canonical_form(const Automaton& a);

// Rebuilds an automaton from a serialized table.
Automaton from_table_bytes(int n, int k, const std::vector<uint8_t>& bytes);

// Plain relabeling (no row sorting): state q becomes state_perm[q], letter a
// becomes letter_perm[a]. Used by tests to exercise canonical invariance.
Automaton relabel(const Automaton& a, const std::vector<int>& state_perm,
                  const std::vector<int>& letter_perm);

}  // namespace resetsearch
