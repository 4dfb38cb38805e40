#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace resetsearch {

// Integer polynomial, coefficients ascending by degree, trailing zeros
// trimmed (the zero polynomial has no coefficients).
struct IntPoly {
  std::vector<int64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b over the integers, or nullopt when b does not divide
// a (requires b with leading coefficient +-1 so the division stays integral).
std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b);

// x^m - 1.
IntPoly poly_cycle(int m);

// The d-th cyclotomic polynomial, computed by exact division of x^d - 1 by
// the lower-order factors and memoized. Thread safe.
const IntPoly& cyclotomic(int d);

}  // namespace resetsearch
