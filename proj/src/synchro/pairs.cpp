#include "synchro/pairs.hpp"

namespace resetsearch {

PairTable compressible_pairs(const Automaton& a) {
  const int n = a.n;
  PairTable t;
  t.n = n;
  t.height.assign(n * n, -1);

  // Walk the pair graph backwards from the pairs some letter merges.
  std::vector<int> queue;
  std::vector<std::vector<int>> rev(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int id = x * n + y;
      bool merges = false;
      for (int l = 0; l < a.k; ++l) {
        int u = a.step(x, l), v = a.step(y, l);
        if (u == v) {
          merges = true;
        } else {
          if (u > v) std::swap(u, v);
          rev[u * n + v].push_back(id);
        }
      }
      if (merges && t.height[id] < 0) {
        t.height[id] = 1;
        queue.push_back(id);
      }
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    const int id = queue[head];
    for (int pred : rev[id]) {
      if (t.height[pred] < 0) {
        t.height[pred] = static_cast<int16_t>(t.height[id] + 1);
        queue.push_back(pred);
      }
    }
  }
  return t;
}

int sync_height(const PairTable& t) {
  int h = 0;
  for (int16_t v : t.height)
    if (v > h) h = v;
  return h;
}

bool is_synchronizing(const Automaton& a) {
  if (a.n == 1) return true;
  PairTable t = compressible_pairs(a);
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y)
      if (t.height[x * a.n + y] < 0) return false;
  return true;
}

}  // namespace resetsearch
