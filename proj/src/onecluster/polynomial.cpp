#include "onecluster/polynomial.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace resetsearch {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
  const int64_t lead = b.c.back();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("poly_div_exact: divisor not monic up to sign");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<int64_t> rem = a.c;
  IntPoly q;
  q.c.assign(a.degree() - b.degree() + 1, 0);
  for (int i = a.degree(); i >= b.degree(); --i) {
    const int64_t coef = rem[i] * lead;  // lead is +-1, so this divides exactly
    q.c[i - b.degree()] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= coef * b.c[j];
  }
  for (int64_t v : rem)
    if (v != 0) return std::nullopt;
  q.trim();
  return q;
}

IntPoly poly_cycle(int m) {
  IntPoly p;
  p.c.assign(m + 1, 0);
  p.c[0] = -1;
  p.c[m] = 1;
  return p;
}

const IntPoly& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: order must be positive");
  // Entries are heap-allocated so references stay valid while the cache grows.
  static std::mutex mu;
  static std::vector<std::unique_ptr<IntPoly>> cache;  // cache[d], entry 0 unused
  std::lock_guard<std::mutex> lock(mu);
  if (d >= static_cast<int>(cache.size())) cache.resize(d + 1);
  for (int i = 1; i <= d; ++i) {
    if (cache[i]) continue;
    IntPoly num = poly_cycle(i);
    for (int e = 1; e < i; ++e) {
      if (i % e != 0) continue;
      auto q = poly_div_exact(num, *cache[e]);
      if (!q) throw std::logic_error("cyclotomic: non-exact division");
      num = *q;
    }
    cache[i] = std::make_unique<IntPoly>(std::move(num));
  }
  return *cache[d];
}

}  // namespace resetsearch
