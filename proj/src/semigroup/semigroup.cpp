#include "semigroup/semigroup.hpp"

#include <algorithm>

#include "core/profile.hpp"
#include "onecluster/bounds.hpp"

namespace resetsearch {

namespace {

// Open-addressing index over the entries array; slots hold entry positions.
struct KeyIndex {
  std::vector<int32_t> slots;
  size_t mask = 0;

  explicit KeyIndex(size_t initial = 1024) { rebuild(initial); }

  void rebuild(size_t size) {
    size_t cap = 16;
    while (cap < size * 2) cap <<= 1;
    slots.assign(cap, -1);
    mask = cap - 1;
  }

  static size_t hash(uint64_t key) {
    key *= 0x9e3779b97f4a7c15ull;
    return static_cast<size_t>(key ^ (key >> 29));
  }

  // Returns the entry position holding `key`, or -1 after remembering the
  // free slot in `free_slot`.
  int32_t find(const std::vector<std::pair<uint64_t, uint32_t>>& entries,
               uint64_t key, size_t& free_slot) const {
    size_t i = hash(key) & mask;
    while (true) {
      const int32_t e = slots[i];
      if (e < 0) {
        free_slot = i;
        return -1;
      }
      if (entries[e].first == key) return e;
      i = (i + 1) & mask;
    }
  }

  void grow_if_needed(const std::vector<std::pair<uint64_t, uint32_t>>& entries) {
    if (entries.size() * 2 < slots.size()) return;
    rebuild(slots.size());
    for (size_t e = 0; e < entries.size(); ++e) {
      size_t i = hash(entries[e].first) & mask;
      while (slots[i] >= 0) i = (i + 1) & mask;
      slots[i] = static_cast<int32_t>(e);
    }
  }
};

}  // namespace

uint64_t pack_transformation(const Transformation& t) {
  uint64_t key = 0;
  for (int q = t.n - 1; q >= 0; --q) key = (key << 4) | t.image[q];
  return key;
}

Transformation unpack_transformation(uint64_t key, int n) {
  Transformation t;
  t.n = n;
  for (int q = 0; q < n; ++q) {
    t.image[q] = static_cast<uint8_t>(key & 0xf);
    key >>= 4;
  }
  return t;
}

SemigroupTable enumerate_semigroup(const Automaton& a, uint64_t cap) {
  SemigroupTable table;
  table.n = a.n;
  std::vector<Transformation> letters(a.k);
  for (int x = 0; x < a.k; ++x) letters[x] = a.letter(x);

  KeyIndex index;
  auto insert = [&](const Transformation& t, uint32_t len) -> bool {
    const uint64_t key = pack_transformation(t);
    size_t free_slot = 0;
    if (index.find(table.entries, key, free_slot) >= 0) return false;
    if (table.entries.size() >= cap) {
      table.complete = false;
      return false;
    }
    index.slots[free_slot] = static_cast<int32_t>(table.entries.size());
    table.entries.emplace_back(key, len);
    index.grow_if_needed(table.entries);
    return true;
  };

  for (int x = 0; x < a.k; ++x) insert(letters[x], 1);
  for (size_t head = 0; head < table.entries.size() && table.complete; ++head) {
    const auto [key, len] = table.entries[head];
    const Transformation t = unpack_transformation(key, a.n);
    for (int x = 0; x < a.k; ++x) {
      insert(compose(t, letters[x]), len + 1);
      if (!table.complete) break;
    }
  }
  return table;
}

std::optional<int64_t> one_cluster_scan(const Automaton& a,
                                        const SemigroupTable& table,
                                        int64_t stop_below) {
  std::optional<int64_t> best;
  for (const auto& [key, len] : table.entries) {
    const Transformation t = unpack_transformation(key, a.n);
    const OneClusterProfile p = functional_profile(t);
    if (!p.one_cluster || p.cycle_length < 2) continue;
    // The tail-sink refinement is never applied here: extensions reaching the
    // unadjusted value exist even when all deepest tail states share a sink
    // (the two-cycle with tail {1,0,0} plus the rotation {2,0,1} has reset
    // length 4, the raw bound), so subtracting would make the scan drop
    // parents that still have qualifying extensions.
    const int64_t b =
        one_cluster_bound(a.n, p.cycle_length, p.level, int64_t{len}, false);
    if (!best || b < *best) best = b;
    if (stop_below > 0 && b < stop_below) return best;
  }
  return best;
}

bool is_reducible_generating_set(const Automaton& a, uint64_t cap) {
  if (a.k <= 1) return false;
  std::vector<Transformation> letters(a.k);
  for (int x = 0; x < a.k; ++x) letters[x] = a.letter(x);

  std::vector<int> keep(a.k - 1);
  for (int drop = 0; drop < a.k; ++drop) {
    int w = 0;
    for (int x = 0; x < a.k; ++x)
      if (x != drop) keep[w++] = x;
    // Letters occurring more than once reduce trivially.
    bool duplicate = false;
    for (int x = 0; x < a.k && !duplicate; ++x)
      if (x != drop && letters[x] == letters[drop]) duplicate = true;
    if (duplicate) return true;

    const uint64_t target = pack_transformation(letters[drop]);
    const Automaton rest = restrict_letters(a, keep);
    // Closure of the remaining letters, stopping as soon as the dropped
    // letter shows up.
    SemigroupTable table;
    table.n = a.n;
    KeyIndex index;
    bool found = false;
    auto insert = [&](const Transformation& t) -> bool {
      const uint64_t key = pack_transformation(t);
      if (key == target) {
        found = true;
        return false;
      }
      size_t free_slot = 0;
      if (index.find(table.entries, key, free_slot) >= 0) return false;
      if (table.entries.size() >= cap) {
        table.complete = false;
        return false;
      }
      index.slots[free_slot] = static_cast<int32_t>(table.entries.size());
      table.entries.emplace_back(key, 0);
      index.grow_if_needed(table.entries);
      return true;
    };
    for (int x = 0; x < rest.k && !found; ++x) insert(rest.letter(x));
    for (size_t head = 0; head < table.entries.size() && table.complete && !found;
         ++head) {
      const Transformation t = unpack_transformation(table.entries[head].first, a.n);
      for (int x = 0; x < rest.k && !found; ++x) insert(compose(t, rest.letter(x)));
    }
    if (found) return true;
  }
  return false;
}

}  // namespace resetsearch
