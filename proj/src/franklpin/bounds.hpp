#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/automaton.hpp"
#include "synchro/pairs.hpp"
#include "synchro/reset.hpp"

namespace resetsearch {

// Length bound for compressing some m-subset given a pool of p compressible
// pairs with merge heights at most h: frankl_limit(n, m) - p + h.
// Throws std::invalid_argument when p exceeds the limit.
int64_t pairs_bound(int n, int m, int64_t p, int h);

// Rank-lowering step: a word of length len with image size m extends to a
// word of strictly smaller rank and length at most 2*len + n - m + 1.
int64_t pin_step(int n, int m, int64_t len);

struct DescentParts {
  bool use_pairs = true;
  bool use_pin = true;
};

// Reset-length bound valid for every synchronizing extension of `a` (new
// letters added, old ones kept): starting from a least-rank word, repeatedly
// descend one rank by the cheaper of the two steps above. For a single
// letter the whole merged-pair pool is usable at every subset size; with
// more letters each size uses a greedily built sequence over the pool.
// Empty when both parts are disabled.
std::optional<int64_t> rank_descent_bound(const Automaton& a,
                                          const SyncAnalysis& analysis,
                                          const PairTable& table,
                                          DescentParts parts = {});

enum class PairLetterRule {
  idempotent_or_involution,  // each letter squares to itself or to identity
  involution_only,
};

// For two-letter automata whose letters both satisfy the rule, a shortest
// reset word never repeats a letter, giving the bound 2n - 2. Empty when the
// rule does not hold. Throws std::invalid_argument unless k == 2.
std::optional<int64_t> alternating_letters_bound(
    const Automaton& a, PairLetterRule rule = PairLetterRule::idempotent_or_involution);

// Reset-length bound n^2 - 4n + 5 for synchronizing automata that are not
// strongly connected, conditional on maximal reset lengths below n being
// (n-2)^2 + 1 or less. Requires n >= 5.
int64_t non_strongly_connected_bound(int n);

// Diagnostic summary used by the bound subcommand.
struct BoundReport {
  bool synchronizing = false;
  int reset_length = -1;
  int min_rank = 0;
  int min_rank_word_length = 0;
  int64_t pair_count = 0;
  int height = 0;
  // (subset size r, greedy sequence length used at r), r = min_rank..2.
  std::vector<std::pair<int, int64_t>> sequence_lengths;
  std::optional<int64_t> descent_bound;
};

BoundReport bound_report(const Automaton& a);

}  // namespace resetsearch
