#include "onecluster/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "onecluster/circulant.hpp"

namespace resetsearch {

int64_t one_cluster_bound(int n, int m, int level, int64_t s, bool sink_adjust) {
  if (m < 2) throw std::invalid_argument("one_cluster_bound: cycle too short");
  if (n < m || level < 0 || level > n - m || s < 1)
    throw std::invalid_argument("one_cluster_bound: bad arguments");
  int64_t b = s * int64_t{level + m - 2} * (m - 1) + int64_t{n + 1} * (m - 1) +
              s * level - sum_dstar(m);
  if (sink_adjust) b -= m - 1;
  return b;
}

int64_t one_cluster_closed_form(int n, int m) {
  if (m < 2 || n < m)
    throw std::invalid_argument("one_cluster_closed_form: bad arguments");
  const double v = 2.0 * n * m - 4.0 * m * std::log((m + 3) / 2.0) - n + m + 2;
  return static_cast<int64_t>(std::floor(v));
}

int64_t steinberg_bound(int n, int m, int level) {
  return 2 * int64_t{n} * m - 3 * n - 4 * m + 2 * level + 8;
}

int64_t carpi_dalessandro_bound(int n, int m) {
  const double v = 2.0 * n * m - 2.0 * m * std::log((m + 1) / 2.0) - n - m;
  return static_cast<int64_t>(std::floor(v));
}

std::string dstar_tables_text(int max_m) {
  auto is_prime = [](int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  };
  std::ostringstream out;
  out << "# least (m - period + rotation span) per cycle length m and weight k\n";
  out << "# columns: k = 1..m-1, then sums over k = 2..m-2 and k = 1..m-1\n";
  for (int m = 4; m <= max_m; ++m) {
    if (is_prime(m)) continue;
    int64_t mid = 0, total = 0;
    out << "m=" << m << " ";
    for (int k = 1; k < m; ++k) {
      const int v = dstar(m, k);
      out << ' ' << v;
      total += v;
      if (k >= 2 && k <= m - 2) mid += v;
    }
    out << "  mid=" << mid << " total=" << total << '\n';
  }
  return out.str();
}

}  // namespace resetsearch
