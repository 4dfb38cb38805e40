#include "core/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace resetsearch {

namespace {

// Searches over assignments of new indices to old states, depth d meaning
// new states 0..d-1 are fixed. For a fixed assignment the letters are free,
// so the serialized table uses the letter rows in sorted order; the minimum
// over assignments of that string is the canonical form.
struct Canonicalizer {
  const Automaton& a;
  int n, k;
  std::array<int8_t, kMaxStates> new_of;  // old state -> new index, -1 open
  std::array<int8_t, kMaxStates> old_of;  // new index -> old state
  std::vector<uint8_t> best;
  bool have_best = false;
  std::vector<std::array<uint8_t, kMaxStates>> rows;  // scratch, one per letter
  std::vector<int> order;                             // scratch row ordering

  explicit Canonicalizer(const Automaton& a_)
      : a(a_), n(a_.n), k(a_.k), rows(a_.k), order(a_.k) {
    new_of.fill(-1);
    old_of.fill(-1);
  }

  // Lower bound on the first d bytes of any completed serialization: entries
  // pointing at still-open states cannot get a new index below d.
  bool prefix_viable(int d) {
    if (!have_best) return true;
    for (int x = 0; x < k; ++x) {
      const uint8_t* row = a.delta.data() + x * n;
      for (int j = 0; j < d; ++j) {
        int8_t v = new_of[row[old_of[j]]];
        rows[x][j] = v >= 0 ? static_cast<uint8_t>(v) : static_cast<uint8_t>(d);
      }
    }
    const uint8_t* lo = rows[0].data();
    for (int x = 1; x < k; ++x)
      if (std::memcmp(rows[x].data(), lo, d) < 0) lo = rows[x].data();
    return std::memcmp(lo, best.data(), d) <= 0;
  }

  void leaf() {
    for (int x = 0; x < k; ++x) {
      const uint8_t* row = a.delta.data() + x * n;
      for (int j = 0; j < n; ++j)
        rows[x][j] = static_cast<uint8_t>(new_of[row[old_of[j]]]);
      order[x] = x;
    }
    std::sort(order.begin(), order.end(), [&](int l, int r) {
      return std::memcmp(rows[l].data(), rows[r].data(), n) < 0;
    });
    if (have_best) {
      int cmp = 0;
      for (int i = 0; i < k && cmp == 0; ++i)
        cmp = std::memcmp(rows[order[i]].data(), best.data() + i * n, n);
      if (cmp >= 0) return;
    }
    best.resize(n * k);
    for (int i = 0; i < k; ++i)
      std::memcpy(best.data() + i * n, rows[order[i]].data(), n);
    have_best = true;
  }

  void search(int d) {
    if (d == n) {
      leaf();
      return;
    }
    for (int o = 0; o < n; ++o) {
      if (new_of[o] >= 0) continue;
      new_of[o] = static_cast<int8_t>(d);
      old_of[d] = static_cast<int8_t>(o);
      if (prefix_viable(d + 1)) search(d + 1);
      new_of[o] = -1;
    }
  }
};

}  // namespace

std::vector<uint8_t> canonical_form(const Automaton& a) {
  Canonicalizer c(a);
  c.search(0);
  return c.best;
}

Automaton from_table_bytes(int n, int k, const std::vector<uint8_t>& bytes) {
  std::vector<int> delta(bytes.begin(), bytes.end());
  return make_automaton(n, k, delta);
}

Automaton relabel(const Automaton& a, const std::vector<int>& state_perm,
                  const std::vector<int>& letter_perm) {
  Automaton r;
  r.n = a.n;
  r.k = a.k;
  r.delta.assign(a.delta.size(), 0);
  for (int x = 0; x < a.k; ++x)
    for (int q = 0; q < a.n; ++q)
      r.delta[letter_perm[x] * a.n + state_perm[q]] =
          static_cast<uint8_t>(state_perm[a.step(q, x)]);
  return r;
}

}  // namespace resetsearch
