#pragma once

#include <cstdint>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

struct SieveConfig {
  // Automata are reported when their exact reset length reaches this value.
  int threshold = 1;
  // Entry cap for semigroup closures (one-cluster scan, reducibility).
  uint64_t semigroup_cap = 2'000'000;
  // Reset lengths of smaller automata assumed at most (n-2)^2 + 1, enabling
  // the twin-pair fast path.
  bool assume_cerny_below = true;
  // Exclusions and fast paths, individually switchable.
  bool use_pairs_bound = true;
  bool use_pin_bound = true;
  bool use_one_cluster = true;
  bool use_reducible_generators = true;
  bool use_twin_pairs = true;
  bool use_alternating_letters = true;
};

enum class DropReason {
  bound_rank_descent,
  bound_one_cluster,
  reducible_generators,
  not_reportable,
};

struct Verdict {
  enum class Kind { report, store, drop } kind = Kind::drop;
  // Filled for reports.
  int reset_length = -1;
  std::vector<uint8_t> reset_word;
  // Filled for drops.
  DropReason reason = DropReason::not_reportable;
};

// Decides one automaton. Synchronizing inputs are reported when strongly
// connected, irreducible and long enough, otherwise dropped as
// not_reportable. Non-synchronizing inputs are dropped when some bound
// places every synchronizing extension below the threshold or when the
// letters are a reducible generating set; the rest are stored for the next
// run. Throws std::invalid_argument when threshold < 1.
Verdict sieve(const Automaton& a, const SieveConfig& cfg);

}  // namespace resetsearch
