#include "core/automaton.hpp"

#include <sstream>

namespace resetsearch {

int apply(const Transformation& t, int q) {
  if (q < 0 || q >= t.n) throw std::invalid_argument("apply: state out of range");
  return t.image[q];
}

Transformation compose(const Transformation& t1, const Transformation& t2) {
  if (t1.n != t2.n) throw std::invalid_argument("compose: size mismatch");
  Transformation r;
  r.n = t1.n;
  for (int q = 0; q < t1.n; ++q) r.image[q] = t2.image[t1.image[q]];
  return r;
}

int rank(const Transformation& t) {
  uint32_t seen = 0;
  for (int q = 0; q < t.n; ++q) seen |= 1u << t.image[q];
  return __builtin_popcount(seen);
}

uint32_t apply_to_set(const Automaton& a, uint32_t set, int letter) {
  uint32_t out = 0;
  const uint8_t* row = a.delta.data() + letter * a.n;
  while (set) {
    int q = __builtin_ctz(set);
    set &= set - 1;
    out |= 1u << row[q];
  }
  return out;
}

Automaton restrict_letters(const Automaton& a, const std::vector<int>& letters) {
  if (letters.empty())
    throw std::invalid_argument("restrict_letters: empty letter selection");
  Automaton r;
  r.n = a.n;
  r.k = static_cast<int>(letters.size());
  r.delta.reserve(r.k * r.n);
  for (int x : letters) {
    if (x < 0 || x >= a.k)
      throw std::invalid_argument("restrict_letters: letter out of range");
    r.delta.insert(r.delta.end(), a.delta.begin() + x * a.n,
                   a.delta.begin() + (x + 1) * a.n);
  }
  return r;
}

bool is_strongly_connected(const Automaton& a) {
  if (a.n <= 1) return true;
  // Reach everything from state 0 along edges, then against them.
  uint32_t fwd = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int x = 0; x < a.k; ++x) next |= apply_to_set(a, frontier, x);
    frontier = next & ~fwd;
    fwd |= frontier;
  }
  const uint32_t all = (a.n == 32) ? ~0u : ((1u << a.n) - 1);
  if (fwd != all) return false;

  uint32_t bwd = 1;
  frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int q = 0; q < a.n; ++q) {
      if (bwd & (1u << q)) continue;
      for (int x = 0; x < a.k; ++x)
        if (frontier & (1u << a.step(q, x))) {
          next |= 1u << q;
          break;
        }
    }
    frontier = next;
    bwd |= next;
  }
  return bwd == all;
}

std::vector<std::pair<int, int>> find_twin_pairs(const Automaton& a) {
  std::vector<std::pair<int, int>> twins;
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) {
      bool ok = true;
      for (int l = 0; l < a.k && ok; ++l) {
        int xa = a.step(x, l), ya = a.step(y, l);
        if (xa == ya) continue;
        bool inside = (xa == x || xa == y) && (ya == x || ya == y);
        if (!inside) ok = false;
      }
      if (ok) twins.emplace_back(x, y);
    }
  return twins;
}

Automaton factor_twin(const Automaton& a, int x, int y) {
  if (x > y) std::swap(x, y);
  if (x < 0 || y >= a.n || x == y)
    throw std::invalid_argument("factor_twin: bad state pair");
  bool found = false;
  for (auto& [tx, ty] : find_twin_pairs(a))
    if (tx == x && ty == y) found = true;
  if (!found) throw std::invalid_argument("factor_twin: not a twin pair");

  // Merge y into x; states above y shift down by one.
  auto remap = [&](int q) {
    if (q == y) q = x;
    return q > y ? q - 1 : q;
  };
  Automaton r;
  r.n = a.n - 1;
  r.k = a.k;
  r.delta.assign(r.k * r.n, 0);
  for (int l = 0; l < a.k; ++l)
    for (int q = 0; q < a.n; ++q) {
      if (q == y) continue;
      r.delta[l * r.n + remap(q)] = static_cast<uint8_t>(remap(a.step(q, l)));
    }
  return r;
}

std::string to_line(const Automaton& a) {
  std::ostringstream out;
  out << a.n << ' ' << a.k << " :";
  for (int l = 0; l < a.k; ++l) {
    if (l) out << " ;";
    for (int q = 0; q < a.n; ++q) out << ' ' << a.step(q, l);
  }
  return out.str();
}

Automaton make_automaton(int n, int k, const std::vector<int>& delta) {
  if (n < 1 || n > kMaxStates) throw ParseError("state count out of range");
  if (k < 1) throw ParseError("letter count out of range");
  if (static_cast<int>(delta.size()) != n * k)
    throw ParseError("transition table has wrong size");
  Automaton a;
  a.n = n;
  a.k = k;
  a.delta.reserve(delta.size());
  for (int v : delta) {
    if (v < 0 || v >= n) throw ParseError("transition target out of range");
    a.delta.push_back(static_cast<uint8_t>(v));
  }
  return a;
}

Automaton parse_line(const std::string& line) {
  std::istringstream in(line);
  int n = 0, k = 0;
  std::string colon;
  if (!(in >> n >> k >> colon) || colon != ":")
    throw ParseError("expected \"n k :\" prefix");
  if (n < 1 || n > kMaxStates) throw ParseError("state count out of range");
  if (k < 1) throw ParseError("letter count out of range");

  std::vector<int> delta;
  delta.reserve(n * k);
  int row = 0, col = 0;
  std::string tok;
  while (in >> tok) {
    if (tok == ";") {
      if (col != n) throw ParseError("short transition row");
      ++row;
      col = 0;
      continue;
    }
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad transition entry \"" + tok + "\"");
    }
    if (used != tok.size()) throw ParseError("bad transition entry \"" + tok + "\"");
    if (v < 0 || v >= n) throw ParseError("transition target out of range");
    if (col == n) throw ParseError("long transition row");
    delta.push_back(v);
    ++col;
  }
  if (row != k - 1 || col != n)
    throw ParseError("expected " + std::to_string(k) + " rows of " +
                     std::to_string(n) + " entries");
  return make_automaton(n, k, delta);
}

}  // namespace resetsearch
