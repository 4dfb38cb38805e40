#include "franklpin/sequence.hpp"

#include <algorithm>

namespace resetsearch {

int64_t frankl_limit(int n, int m) {
  if (m < 2 || m > n) throw std::invalid_argument("frankl_limit: need 2 <= m <= n");
  const int64_t t = n - m + 2;
  return t * (t - 1) / 2;
}

bool validate_sequence(const PairSequence& s) {
  if (s.n < 1 || s.m < 2 || s.m > s.n) return false;
  const uint32_t universe = (1u << s.n) - 1;
  for (size_t i = 0; i < s.items.size(); ++i) {
    const SequenceItem& it = s.items[i];
    if (it.set & ~universe) return false;
    if (__builtin_popcount(it.set) != s.m) return false;
    const auto [x, y] = it.pair;
    if (x == y || x >= s.n || y >= s.n) return false;
    const uint32_t pair_mask = (1u << x) | (1u << y);
    if ((it.set & pair_mask) != pair_mask) return false;
    for (size_t j = 0; j < i; ++j)
      if ((s.items[j].set & pair_mask) == pair_mask) return false;
  }
  return true;
}

PairSequence greedy_sequence(const std::vector<std::pair<int, int>>& pairs,
                             int m, int n) {
  if (m < 2 || m > n || n > kMaxStates)
    throw std::invalid_argument("greedy_sequence: need 2 <= m <= n");
  std::vector<std::pair<int, int>> remaining;
  remaining.reserve(pairs.size());
  for (auto [x, y] : pairs) {
    if (x == y || x < 0 || y < 0 || x >= n || y >= n)
      throw std::invalid_argument("greedy_sequence: bad pair");
    if (x > y) std::swap(x, y);
    remaining.emplace_back(x, y);
  }
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()),
                  remaining.end());

  PairSequence seq;
  seq.n = n;
  seq.m = m;
  while (!remaining.empty()) {
    // Pair sharing a state with the fewest other remaining pairs; the list
    // is sorted, so the first minimum is the lexicographically least.
    size_t pick = 0;
    int best_inc = -1;
    for (size_t i = 0; i < remaining.size(); ++i) {
      int inc = 0;
      for (size_t j = 0; j < remaining.size(); ++j) {
        if (j == i) continue;
        const auto& [px, py] = remaining[i];
        const auto& [qx, qy] = remaining[j];
        if (qx == px || qx == py || qy == px || qy == py) ++inc;
      }
      if (best_inc < 0 || inc < best_inc) {
        best_inc = inc;
        pick = i;
      }
    }
    const auto [px, py] = remaining[pick];
    remaining.erase(remaining.begin() + pick);

    uint32_t set = (1u << px) | (1u << py);
    int size = 2;
    while (size < m) {
      int best = -1, best_touch = 0;
      for (int s = 0; s < n; ++s) {
        if (set & (1u << s)) continue;
        bool completes = false;
        int touch = 0;
        for (const auto& [qx, qy] : remaining) {
          if (qx != s && qy != s) continue;
          ++touch;
          const int other = (qx == s) ? qy : qx;
          if (set & (1u << other)) completes = true;
        }
        if (completes) continue;
        if (best < 0 || touch < best_touch) {
          best = s;
          best_touch = touch;
        }
      }
      if (best < 0) break;  // set cannot grow further; drop this item
      set |= 1u << best;
      ++size;
    }
    if (size == m)
      seq.items.push_back({set, {static_cast<uint8_t>(px), static_cast<uint8_t>(py)}});
  }
  return seq;
}

UnaryPairStats unary_stats(const Transformation& t) {
  const int n = t.n;
  UnaryPairStats st;

  std::array<uint8_t, kMaxStates> power;
  for (int q = 0; q < n; ++q) power[q] = static_cast<uint8_t>(q);
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q) power[q] = t.image[power[q]];
  uint32_t cyclic = 0;
  for (int q = 0; q < n; ++q) cyclic |= 1u << power[q];
  st.eventual_rank = __builtin_popcount(cyclic);

  // Iterate the map; a pair's merge time is the first power equating it.
  // Once every state sits on a cycle the map acts injectively, so all merges
  // happen within the tail depth.
  std::array<uint8_t, kMaxStates> img;
  for (int q = 0; q < n; ++q) img[q] = static_cast<uint8_t>(q);
  std::vector<int> merge_time(n * n, -1);
  for (int step = 1; step <= n; ++step) {
    for (int q = 0; q < n; ++q) img[q] = t.image[img[q]];
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (merge_time[x * n + y] < 0 && img[x] == img[y])
          merge_time[x * n + y] = step;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (merge_time[x * n + y] >= 0) {
        st.pairs.emplace_back(x, y);
        st.height = std::max(st.height, merge_time[x * n + y]);
      }
  return st;
}

}  // namespace resetsearch
