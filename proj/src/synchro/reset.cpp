#include "synchro/reset.hpp"

#include "synchro/pairs.hpp"

namespace resetsearch {

namespace {

// Depth-bounded search for the lexicographically least word of length
// `remaining` that takes `set` to a singleton. Letters are tried in
// increasing order, so the first hit is the least word. `fail[set]` keeps the
// largest budget already known to be insufficient from that subset.
bool least_word(const Automaton& a, uint32_t set, int remaining,
                std::vector<int16_t>& fail, std::vector<uint8_t>& word,
                int depth) {
  if (remaining == 0) return __builtin_popcount(set) == 1;
  if (fail[set] >= remaining) return false;
  for (int l = 0; l < a.k; ++l) {
    word[depth] = static_cast<uint8_t>(l);
    if (least_word(a, apply_to_set(a, set, l), remaining - 1, fail, word,
                   depth + 1))
      return true;
  }
  fail[set] = static_cast<int16_t>(remaining);
  return false;
}

}  // namespace

SyncAnalysis reset_analysis(const Automaton& a) {
  const int n = a.n;
  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  SyncAnalysis r;
  r.min_rank = n;
  if (n == 1) {
    r.synchronizing = true;
    r.reset_length = 0;
    r.min_rank = 1;
    return r;
  }

  std::vector<int16_t> dist(size_t{1} << n, -1);
  std::vector<uint32_t> queue;
  queue.reserve(size_t{1} << n);
  dist[full] = 0;
  queue.push_back(full);
  for (size_t head = 0; head < queue.size(); ++head) {
    const uint32_t s = queue[head];
    for (int l = 0; l < a.k; ++l) {
      const uint32_t t = apply_to_set(a, s, l);
      if (dist[t] >= 0) continue;
      dist[t] = static_cast<int16_t>(dist[s] + 1);
      const int pc = __builtin_popcount(t);
      if (pc < r.min_rank) {
        r.min_rank = pc;
        r.min_rank_word_length = dist[t];
      }
      if (pc == 1) {
        // First singleton in breadth-first order: shortest reset length.
        r.synchronizing = true;
        r.reset_length = dist[t];
        head = queue.size();
        break;
      }
      queue.push_back(t);
    }
  }

  if (r.synchronizing && r.reset_length > 0) {
    std::vector<int16_t> fail(size_t{1} << n, -1);
    r.reset_word.assign(r.reset_length, 0);
    least_word(a, full, r.reset_length, fail, r.reset_word, 0);
  }
  return r;
}

bool is_irreducibly_synchronizing(const Automaton& a) {
  if (!is_synchronizing(a))
    throw std::invalid_argument(
        "is_irreducibly_synchronizing: automaton is not synchronizing");
  if (a.k == 1) return true;
  std::vector<int> keep(a.k - 1);
  for (int drop = 0; drop < a.k; ++drop) {
    int w = 0;
    for (int l = 0; l < a.k; ++l)
      if (l != drop) keep[w++] = l;
    if (is_synchronizing(restrict_letters(a, keep))) return false;
  }
  return true;
}

}  // namespace resetsearch
