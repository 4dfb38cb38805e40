#include "sieve/sieve.hpp"

#include <stdexcept>

#include "franklpin/bounds.hpp"
#include "semigroup/semigroup.hpp"
#include "synchro/pairs.hpp"
#include "synchro/reset.hpp"

namespace resetsearch {

namespace {

Verdict drop(DropReason reason) {
  Verdict v;
  v.kind = Verdict::Kind::drop;
  v.reason = reason;
  return v;
}

bool all_pairs_compressible(const PairTable& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = x + 1; y < t.n; ++y)
      if (t.height[x * t.n + y] < 0) return false;
  return true;
}

Verdict sieve_synchronizing(const Automaton& a, const SieveConfig& cfg) {
  if (!is_strongly_connected(a)) return drop(DropReason::not_reportable);
  // Fast paths: a cheap certified upper bound below the threshold settles
  // the verdict without the subset search. They only ever skip reporting
  // work; storage decisions never look at them.
  if (cfg.use_alternating_letters && a.k == 2 && cfg.threshold > 2 * a.n - 2 &&
      alternating_letters_bound(a))
    return drop(DropReason::not_reportable);
  if (cfg.use_twin_pairs && cfg.assume_cerny_below && a.n >= 5 &&
      cfg.threshold > a.n * a.n - 4 * a.n + 5 && !find_twin_pairs(a).empty())
    return drop(DropReason::not_reportable);
  if (!is_irreducibly_synchronizing(a)) return drop(DropReason::not_reportable);
  SyncAnalysis s = reset_analysis(a);
  if (s.reset_length < cfg.threshold) return drop(DropReason::not_reportable);
  Verdict v;
  v.kind = Verdict::Kind::report;
  v.reset_length = s.reset_length;
  v.reset_word = s.reset_word;
  return v;
}

Verdict sieve_non_synchronizing(const Automaton& a, const PairTable& pt,
                                const SieveConfig& cfg) {
  DescentParts parts{cfg.use_pairs_bound, cfg.use_pin_bound};
  if (parts.use_pairs || parts.use_pin) {
    SyncAnalysis s = reset_analysis(a);
    std::optional<int64_t> bound = rank_descent_bound(a, s, pt, parts);
    if (bound && *bound < cfg.threshold)
      return drop(DropReason::bound_rank_descent);
  }
  if (cfg.use_one_cluster) {
    SemigroupTable table = enumerate_semigroup(a, cfg.semigroup_cap);
    std::optional<int64_t> bound = one_cluster_scan(a, table, cfg.threshold);
    if (bound && *bound < cfg.threshold)
      return drop(DropReason::bound_one_cluster);
  }
  if (cfg.use_reducible_generators &&
      is_reducible_generating_set(a, cfg.semigroup_cap))
    return drop(DropReason::reducible_generators);
  Verdict v;
  v.kind = Verdict::Kind::store;
  return v;
}

}  // namespace

Verdict sieve(const Automaton& a, const SieveConfig& cfg) {
  if (cfg.threshold < 1)
    throw std::invalid_argument("sieve: threshold must be at least 1");
  if (a.n == 1) {
    // Single state: synchronizing with the empty word, never at threshold.
    return drop(DropReason::not_reportable);
  }
  PairTable pt = compressible_pairs(a);
  if (all_pairs_compressible(pt)) return sieve_synchronizing(a, cfg);
  return sieve_non_synchronizing(a, pt, cfg);
}

}  // namespace resetsearch
