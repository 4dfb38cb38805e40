#pragma once

#include <string>
#include <vector>

#include "core/automaton.hpp"

namespace resetsearch {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set of pairwise non-isomorphic automata of one shape, kept as canonical
// serialized tables in strictly increasing byte order.
struct Pool {
  int n = 0;
  int k = 0;
  std::vector<std::vector<uint8_t>> members;
};

// Union of pools of the same shape. Throws std::invalid_argument on mismatch.
Pool merge_pools(const std::vector<Pool>& pools);

// File form: "#pool n=<n> k=<k> count=<c>" then one automaton line per
// member, in member order. read_pool reports problems as ParseError with
// "<path>:<line>: <reason>" and I/O failures as IoError.
void write_pool(const Pool& p, const std::string& path);
Pool read_pool(const std::string& path);

}  // namespace resetsearch
