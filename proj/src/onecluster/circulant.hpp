#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace resetsearch {

// Binary vector of length m indexed cyclically, stored as the low m bits.
struct CyclicVector {
  int m = 0;
  uint32_t bits = 0;
};

// Least q >= 1 (a divisor of m) with the rotation by q fixing the vector.
int cyclic_period(const CyclicVector& v);

// Dimension of the span of all m rotations of the vector over the rationals.
// Equals m minus the degree of gcd(S(x), x^m - 1) where S is the vector read
// as a 0/1 polynomial; the gcd degree is found by testing which cyclotomic
// factors of x^m - 1 divide S. Throws std::invalid_argument on a zero vector.
int circulant_dim(const CyclicVector& v);

// Least rotation-span dimension over all weight-k vectors of length m
// (1 <= k <= m).
int min_circulant_dim(int m, int k);

// Least value of (m - period + rotation-span dimension) over all weight-k
// vectors of length m (1 <= k <= m-1). Cached per m; see dstar_prebuild.
int dstar(int m, int k);

// Sum of dstar(m, k) for k = 1..m-1.
int64_t sum_dstar(int m);

// Fills the per-m cache up to m_max so later reads are cheap and the build
// happens before any parallel phase. Thread safe either way.
void dstar_prebuild(int m_max);

// Visits every binary necklace of length m exactly once (rotation-least
// representatives), passing the bits and the exact rotation period.
void for_each_necklace(int m, const std::function<void(uint32_t, int)>& visit);

}  // namespace resetsearch
