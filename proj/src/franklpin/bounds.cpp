#include "franklpin/bounds.hpp"

#include <algorithm>

#include "franklpin/sequence.hpp"

namespace resetsearch {

int64_t pairs_bound(int n, int m, int64_t p, int h) {
  const int64_t limit = frankl_limit(n, m);
  if (p < 0 || p > limit)
    throw std::invalid_argument("pairs_bound: pair count outside [0, limit]");
  if (h < 0) throw std::invalid_argument("pairs_bound: negative height");
  return limit - p + h;
}

int64_t pin_step(int n, int m, int64_t len) {
  if (m < 2 || m > n) throw std::invalid_argument("pin_step: need 2 <= m <= n");
  if (len < 0) throw std::invalid_argument("pin_step: negative length");
  return 2 * len + n - m + 1;
}

std::optional<int64_t> rank_descent_bound(const Automaton& a,
                                          const SyncAnalysis& analysis,
                                          const PairTable& table,
                                          DescentParts parts) {
  if (!parts.use_pairs && !parts.use_pin) return std::nullopt;
  const int n = a.n;
  const int m = analysis.min_rank;
  int64_t cur = analysis.min_rank_word_length;
  if (m <= 1) return cur;

  const int h = sync_height(table);
  const auto pool = table.compressible_list();
  for (int r = m; r >= 2; --r) {
    int64_t next = INT64_MAX;
    if (parts.use_pin) next = std::min(next, pin_step(n, r, cur));
    if (parts.use_pairs) {
      const int64_t p_r =
          (a.k == 1) ? static_cast<int64_t>(pool.size())
                     : static_cast<int64_t>(greedy_sequence(pool, r, n).items.size());
      next = std::min(next, cur + pairs_bound(n, r, p_r, h));
    }
    cur = next;
  }
  return cur;
}

std::optional<int64_t> alternating_letters_bound(const Automaton& a,
                                                 PairLetterRule rule) {
  if (a.k != 2)
    throw std::invalid_argument("alternating_letters_bound: needs two letters");
  for (int x = 0; x < 2; ++x) {
    const Transformation t = a.letter(x);
    const Transformation sq = compose(t, t);
    bool involution = true;
    for (int q = 0; q < a.n; ++q)
      if (sq.image[q] != q) involution = false;
    const bool idempotent = (sq == t);
    const bool ok = (rule == PairLetterRule::involution_only)
                        ? involution
                        : (involution || idempotent);
    if (!ok) return std::nullopt;
  }
  return 2 * int64_t{a.n} - 2;
}

int64_t non_strongly_connected_bound(int n) {
  if (n < 5)
    throw std::invalid_argument("non_strongly_connected_bound: needs n >= 5");
  return int64_t{n} * n - 4 * n + 5;
}

BoundReport bound_report(const Automaton& a) {
  BoundReport r;
  const SyncAnalysis analysis = reset_analysis(a);
  r.synchronizing = analysis.synchronizing;
  r.reset_length = analysis.reset_length;
  r.min_rank = analysis.min_rank;
  r.min_rank_word_length = analysis.min_rank_word_length;
  const PairTable table = compressible_pairs(a);
  const auto pool = table.compressible_list();
  r.pair_count = static_cast<int64_t>(pool.size());
  r.height = sync_height(table);
  if (!r.synchronizing) {
    for (int rr = r.min_rank; rr >= 2; --rr) {
      const int64_t p_r =
          (a.k == 1) ? r.pair_count
                     : static_cast<int64_t>(greedy_sequence(pool, rr, a.n).items.size());
      r.sequence_lengths.emplace_back(rr, p_r);
    }
    r.descent_bound = rank_descent_bound(a, analysis, table);
  }
  return r;
}

}  // namespace resetsearch
