#include "generator/pool.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "core/canonical.hpp"

namespace resetsearch {

Pool merge_pools(const std::vector<Pool>& pools) {
  if (pools.empty()) throw std::invalid_argument("merge_pools: nothing to merge");
  Pool out;
  out.n = pools[0].n;
  out.k = pools[0].k;
  size_t total = 0;
  for (const Pool& p : pools) {
    if (p.n != out.n || p.k != out.k)
      throw std::invalid_argument("merge_pools: shape mismatch");
    total += p.members.size();
  }
  out.members.reserve(total);
  for (const Pool& p : pools)
    out.members.insert(out.members.end(), p.members.begin(), p.members.end());
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  return out;
}

void write_pool(const Pool& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "#pool n=" << p.n << " k=" << p.k << " count=" << p.members.size()
      << '\n';
  for (const auto& m : p.members) out << to_line(from_table_bytes(p.n, p.k, m)) << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

Pool read_pool(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path + ":1: missing pool header");
  Pool p;
  size_t count = 0;
  if (std::sscanf(line.c_str(), "#pool n=%d k=%d count=%zu", &p.n, &p.k, &count) != 3)
    throw ParseError(path + ":1: malformed pool header");
  if (p.n < 1 || p.n > kMaxStates || p.k < 1)
    throw ParseError(path + ":1: pool shape out of range");

  p.members.reserve(count);
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Automaton a;
    try {
      a = parse_line(line);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (a.n != p.n || a.k != p.k)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": automaton shape differs from pool header");
    p.members.emplace_back(a.delta);
  }
  if (p.members.size() != count)
    throw ParseError(path + ": member count does not match header");
  for (size_t i = 1; i < p.members.size(); ++i)
    if (!(p.members[i - 1] < p.members[i]))
      throw ParseError(path + ": members not in strictly increasing order");
  return p;
}

}  // namespace resetsearch
