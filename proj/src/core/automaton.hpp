#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resetsearch {

// Hard cap on the state count. Subsets of states are handled as bitmasks and
// several hot paths pack a full transformation into 4 bits per state.
constexpr int kMaxStates = 16;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-map of the state set {0, ..., n-1}.
struct Transformation {
  int n = 0;
  std::array<uint8_t, kMaxStates> image{};

  bool operator==(const Transformation& o) const {
    if (n != o.n) return false;
    for (int q = 0; q < n; ++q)
      if (image[q] != o.image[q]) return false;
    return true;
  }
};

// Complete deterministic automaton: n states, k letters, transition table
// stored letter-major (delta[a*n + q] is the successor of state q on letter a).
struct Automaton {
  int n = 0;
  int k = 0;
  std::vector<uint8_t> delta;

  int step(int q, int a) const { return delta[a * n + q]; }

  Transformation letter(int a) const {
    Transformation t;
    t.n = n;
    for (int q = 0; q < n; ++q) t.image[q] = delta[a * n + q];
    return t;
  }

  bool operator==(const Automaton& o) const {
    return n == o.n && k == o.k && delta == o.delta;
  }
};

int apply(const Transformation& t, int q);

// Left-to-right composition: the result maps q to t2(t1(q)), matching how a
// word extends on the right.
Transformation compose(const Transformation& t1, const Transformation& t2);

// Number of distinct values in the image.
int rank(const Transformation& t);

// Image of a state subset (bitmask) under one letter.
uint32_t apply_to_set(const Automaton& a, uint32_t set, int letter);

// Sub-automaton over a subset of the letters, in the order given.
// Throws std::invalid_argument on an empty selection or a bad letter index.
Automaton restrict_letters(const Automaton& a, const std::vector<int>& letters);

bool is_strongly_connected(const Automaton& a);

// Pairs x < y such that every letter either merges the pair or keeps it
// inside {x, y}. Such a pair behaves as a single state in the factor below.
std::vector<std::pair<int, int>> find_twin_pairs(const Automaton& a);

// Automaton on n-1 states obtained by merging the twin pair {x, y}.
// Throws std::invalid_argument unless {x, y} is a twin pair of a.
Automaton factor_twin(const Automaton& a, int x, int y);

// Text form: "n k : d(0,a0) ... d(n-1,a0) ; d(1,a1) ... ; ...".
std::string to_line(const Automaton& a);

// Parses the text form. Throws ParseError with a human-readable reason.
Automaton parse_line(const std::string& line);

// Construction guard shared by parse and the C API: validates ranges.
Automaton make_automaton(int n, int k, const std::vector<int>& delta);

}  // namespace resetsearch
