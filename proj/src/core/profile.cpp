#include "core/profile.hpp"

namespace resetsearch {

OneClusterProfile functional_profile(const Transformation& t) {
  const int n = t.n;
  OneClusterProfile p;

  // After n steps every state has entered a cycle, so the n-fold image is
  // exactly the set of cyclic states.
  std::array<uint8_t, kMaxStates> power;
  for (int q = 0; q < n; ++q) power[q] = static_cast<uint8_t>(q);
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q) power[q] = t.image[power[q]];
  for (int q = 0; q < n; ++q) p.cycle |= 1u << power[q];

  // Depth of each state: steps needed to land on the cycle set.
  std::array<int8_t, kMaxStates> depth;
  for (int q = 0; q < n; ++q) {
    int d = 0, s = q;
    while (!(p.cycle & (1u << s))) {
      s = t.image[s];
      ++d;
    }
    depth[q] = static_cast<int8_t>(d);
    if (d > p.level) p.level = d;
  }

  // One cluster exactly when the cyclic states form a single orbit.
  int start = __builtin_ctz(p.cycle);
  int len = 0, s = start;
  do {
    s = t.image[s];
    ++len;
  } while (s != start);
  p.one_cluster = (len == __builtin_popcount(p.cycle));
  if (p.one_cluster) p.cycle_length = len;

  if (p.one_cluster && p.level >= 1) {
    // Landing points of the deepest tail states after `level` steps.
    int sink = -1;
    bool unique = true;
    for (int q = 0; q < n && unique; ++q) {
      if (depth[q] != p.level) continue;
      int v = q;
      for (int i = 0; i < p.level; ++i) v = t.image[v];
      if (sink < 0)
        sink = v;
      else if (sink != v)
        unique = false;
    }
    if (unique && sink >= 0) p.tail_sink = sink;
  }
  return p;
}

}  // namespace resetsearch
