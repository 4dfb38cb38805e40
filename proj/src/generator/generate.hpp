#pragma once

#include <functional>
#include <vector>

#include "core/automaton.hpp"
#include "generator/pool.hpp"

namespace resetsearch {

// All unary automata on n states up to isomorphism, as a sorted pool of
// canonical tables. Throws std::invalid_argument unless 1 <= n <= 8.
Pool enumerate_unary(int n);

// Every one-letter extension of the parent (the new letter appended last),
// canonicalized, deduplicated within the stream, emitted in first-seen
// order. Duplicates across different parents are left to pool merging.
void for_each_extension(const Automaton& parent,
                        const std::function<void(const Automaton&)>& fn);

std::vector<Automaton> extensions(const Automaton& parent);

}  // namespace resetsearch
