#include "onecluster/circulant.hpp"

#include <climits>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "onecluster/polynomial.hpp"

namespace resetsearch {

namespace {

constexpr int kMaxCycle = 31;  // vectors live in uint32 bitmasks

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Divisors d >= 2 of m with their cyclotomic polynomials, prepared once per
// m. The factor for d = 1 is skipped: it divides only the zero-weight vector.
struct DimContext {
  int m;
  struct Factor {
    int d;
    int deg;
    std::vector<int64_t> phi;
  };
  std::vector<Factor> factors;

  explicit DimContext(int m_) : m(m_) {
    for (int d = 2; d <= m; ++d) {
      if (m % d != 0) continue;
      const IntPoly& p = cyclotomic(d);
      factors.push_back({d, p.degree(), p.c});
    }
  }

  // m minus the total degree of the cyclotomic factors dividing the vector
  // polynomial. Divisibility by a factor of order d only depends on the bit
  // counts per residue class mod d, since x^d is 1 modulo that factor.
  int dim(uint32_t bits) const {
    int gcd_deg = 0;
    for (const Factor& f : factors) {
      int64_t c[kMaxCycle + 1] = {0};
      for (int j = 0; j < m; ++j)
        if (bits & (1u << j)) c[j % f.d] += 1;
      for (int i = f.d - 1; i >= f.deg; --i) {
        const int64_t coef = c[i];
        if (coef == 0) continue;
        for (int j = 0; j <= f.deg; ++j) c[i - f.deg + j] -= coef * f.phi[j];
      }
      bool zero = true;
      for (int i = 0; i < f.deg && zero; ++i) zero = (c[i] == 0);
      if (zero) gcd_deg += f.deg;
    }
    return m - gcd_deg;
  }
};

struct Row {
  std::vector<int> dstar;  // index k, valid 1..m-1
  std::vector<int> dmin;   // index k, valid 1..m
};

const Row& row_for(int m) {
  static std::shared_mutex mu;
  static std::vector<std::unique_ptr<Row>> rows;
  {
    std::shared_lock<std::shared_mutex> lock(mu);
    if (m < static_cast<int>(rows.size()) && rows[m]) return *rows[m];
  }
  std::unique_lock<std::shared_mutex> lock(mu);
  if (m >= static_cast<int>(rows.size())) rows.resize(m + 1);
  if (rows[m]) return *rows[m];

  auto row = std::make_unique<Row>();
  row->dstar.assign(m + 1, INT_MAX);
  row->dmin.assign(m + 1, INT_MAX);
  if (is_prime(m)) {
    // For prime m only the full factor of degree m-1 can divide a 0/1
    // vector polynomial, and only for the all-ones vector. Everything else
    // has full span and full period.
    for (int k = 1; k < m; ++k) {
      row->dmin[k] = m;
      row->dstar[k] = m;
    }
    row->dmin[m] = 1;
  } else {
    DimContext ctx(m);
    for_each_necklace(m, [&](uint32_t bits, int period) {
      if (bits == 0) return;
      const int k = __builtin_popcount(bits);
      const int dim = ctx.dim(bits);
      if (dim < row->dmin[k]) row->dmin[k] = dim;
      if (k < m) {
        const int value = m - period + dim;
        if (value < row->dstar[k]) row->dstar[k] = value;
      }
    });
  }
  rows[m] = std::move(row);
  return *rows[m];
}

}  // namespace

int cyclic_period(const CyclicVector& v) {
  if (v.m < 1 || v.m > kMaxCycle)
    throw std::invalid_argument("cyclic_period: bad length");
  const uint32_t mask = (1u << v.m) - 1;
  if ((v.bits & ~mask) != 0)
    throw std::invalid_argument("cyclic_period: bits beyond length");
  for (int q = 1; q < v.m; ++q) {
    if (v.m % q != 0) continue;
    const uint32_t rot = ((v.bits >> q) | (v.bits << (v.m - q))) & mask;
    if (rot == v.bits) return q;
  }
  return v.m;
}

int circulant_dim(const CyclicVector& v) {
  if (v.m < 1 || v.m > kMaxCycle)
    throw std::invalid_argument("circulant_dim: bad length");
  if (v.bits == 0) throw std::invalid_argument("circulant_dim: zero vector");
  if ((v.bits & ~((1u << v.m) - 1)) != 0)
    throw std::invalid_argument("circulant_dim: bits beyond length");
  return DimContext(v.m).dim(v.bits);
}

int min_circulant_dim(int m, int k) {
  if (m < 1 || m > kMaxCycle || k < 1 || k > m)
    throw std::invalid_argument("min_circulant_dim: bad arguments");
  return row_for(m).dmin[k];
}

int dstar(int m, int k) {
  if (m < 2 || m > kMaxCycle || k < 1 || k > m - 1)
    throw std::invalid_argument("dstar: bad arguments");
  return row_for(m).dstar[k];
}

int64_t sum_dstar(int m) {
  if (m < 2 || m > kMaxCycle)
    throw std::invalid_argument("sum_dstar: bad arguments");
  const Row& row = row_for(m);
  int64_t total = 0;
  for (int k = 1; k < m; ++k) total += row.dstar[k];
  return total;
}

void dstar_prebuild(int m_max) {
  for (int m = 2; m <= m_max && m <= kMaxCycle; ++m) row_for(m);
}

void for_each_necklace(int m, const std::function<void(uint32_t, int)>& visit) {
  if (m < 1 || m > kMaxCycle)
    throw std::invalid_argument("for_each_necklace: bad length");
  std::vector<uint8_t> a(m + 1, 0);
  // Classic recursive scheme: a[1..t] extends the current prenecklace whose
  // longest Lyndon prefix has length p; strings with m % p == 0 are exactly
  // the rotation-least necklace representatives, with exact period p.
  std::function<void(int, int)> rec = [&](int t, int p) {
    if (t > m) {
      if (m % p == 0) {
        uint32_t bits = 0;
        for (int j = 1; j <= m; ++j)
          if (a[j]) bits |= 1u << (j - 1);
        visit(bits, p);
      }
      return;
    }
    a[t] = a[t - p];
    rec(t + 1, p);
    if (a[t - p] == 0) {
      a[t] = 1;
      rec(t + 1, t);
    }
  };
  rec(1, 1);
}

}  // namespace resetsearch
