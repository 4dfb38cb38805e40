#pragma once

#include <cstdint>
#include <string>

namespace resetsearch {

// Reset-length bound for a synchronizing extension of an automaton that
// contains a one-cluster transformation with cycle length m (>= 2), tail
// level `level`, reachable by a word of length s (>= 1). sink_adjust
// subtracts a further m - 1, the refinement suggested when the deepest tail
// states funnel into one cycle state (OneClusterProfile's tail_sink), but
// that figure is NOT safe to prune with: automata satisfying the funnel
// condition admit extensions whose reset length equals the unadjusted value
// ({1,0,0} with {2,0,1} reaches 4; the chain {1,2,0,0,3} with {0,3,1,4,1}
// reaches the full 14). Callers that exclude candidates must pass false;
// the flag remains for side-by-side diagnostics.
int64_t one_cluster_bound(int n, int m, int level, int64_t s, bool sink_adjust);

// Closed-form ceiling of the one-cluster bound over all levels at s = 1:
// floor(2nm - 4m ln((m+3)/2) - n + m + 2).
int64_t one_cluster_closed_form(int n, int m);

// Comparable published bounds for one-cluster automata with a cycle of
// length m reached at level `level`.
int64_t steinberg_bound(int n, int m, int level);
int64_t carpi_dalessandro_bound(int n, int m);

// Table of dstar values and their sums for composite m up to max_m, one line
// per m: "m=<m> <v1> ... <v_{m-1}> mid=<sum k=2..m-2> total=<sum k=1..m-1>".
std::string dstar_tables_text(int max_m);

}  // namespace resetsearch
