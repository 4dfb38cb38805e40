#include "generator/generate.hpp"

#include <set>

#include "core/canonical.hpp"

namespace resetsearch {

namespace {

// True when conjugating by some adjacent transposition yields a smaller
// table, i.e. the map cannot be the least element of its class. Cheap filter
// in front of full canonicalization.
bool adjacent_swap_improves(const uint8_t* image, int n) {
  for (int i = 0; i + 1 < n; ++i) {
    for (int q = 0; q < n; ++q) {
      int tq = q == i ? i + 1 : q == i + 1 ? i : q;
      int v = image[tq];
      v = v == i ? i + 1 : v == i + 1 ? i : v;
      if (v < image[q]) return true;
      if (v > image[q]) break;
    }
  }
  return false;
}

}  // namespace

Pool enumerate_unary(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_unary: n must be in [1, 8]");
  Pool pool;
  pool.n = n;
  pool.k = 1;
  if (n == 1) {
    pool.members.push_back({0});
    return pool;
  }
  std::set<std::vector<uint8_t>> seen;
  std::vector<uint8_t> image(size_t(n), 0);
  Automaton a;
  a.n = n;
  a.k = 1;
  for (;;) {
    if (!adjacent_swap_improves(image.data(), n)) {
      a.delta = image;
      seen.insert(canonical_form(a));
    }
    int pos = n - 1;
    while (pos >= 0 && ++image[pos] == n) image[pos--] = 0;
    if (pos < 0) break;
    // the least conjugate sends state 0 to 0 or 1, so larger first entries
    // cannot contribute new classes
    if (pos == 0 && image[0] > 1) break;
  }
  pool.members.assign(seen.begin(), seen.end());
  return pool;
}

void for_each_extension(const Automaton& parent,
                        const std::function<void(const Automaton&)>& fn) {
  const int n = parent.n;
  const size_t base = parent.delta.size();
  Automaton child;
  child.n = n;
  child.k = parent.k + 1;
  child.delta = parent.delta;
  child.delta.resize(base + n, 0);
  std::set<std::vector<uint8_t>> seen;
  for (;;) {
    std::vector<uint8_t> canon = canonical_form(child);
    if (seen.insert(canon).second) fn(from_table_bytes(n, child.k, canon));
    int pos = n - 1;
    while (pos >= 0 && ++child.delta[base + pos] == n) child.delta[base + pos--] = 0;
    if (pos < 0) break;
  }
}

std::vector<Automaton> extensions(const Automaton& parent) {
  std::vector<Automaton> out;
  for_each_extension(parent, [&](const Automaton& a) { out.push_back(a); });
  return out;
}

}  // namespace resetsearch
