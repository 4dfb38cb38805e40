#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "generator/pool.hpp"
#include "sieve/sieve.hpp"

namespace resetsearch {

struct ReportRow {
  std::vector<uint8_t> table;  // canonical transition table
  int reset_length = 0;
  bool strongly_connected = true;
  bool irreducible = true;
};

struct RunStats {
  uint64_t generated = 0;
  uint64_t reported = 0;
  uint64_t not_reportable = 0;
  uint64_t dropped_rank_descent = 0;
  uint64_t dropped_one_cluster = 0;
  uint64_t dropped_reducible_generators = 0;
  uint64_t stored = 0;

  bool conserved() const;
  std::string text() const;
  RunStats& operator+=(const RunStats& o);
};

struct RunResult {
  int n = 0;
  int k = 0;
  std::vector<ReportRow> reports;  // sorted by table
  Pool pool;                       // automata kept for the next run
  RunStats stats;
};

// Sieves the pool members themselves (the seed stage of the pipeline).
RunResult sieve_pool(const Pool& in, const SieveConfig& cfg);

// Sieves every one-letter extension of the pool members, deduplicated
// globally by canonical form. Work is split across `jobs` threads; outputs
// are sorted, so they do not depend on the job count.
RunResult run_extension(const Pool& in, const SieveConfig& cfg, int jobs = 1);

// Seed stage plus k-1 extension stages; one result per stage.
std::vector<RunResult> pipeline(int n, int k, const SieveConfig& cfg,
                                int jobs = 1);

// Tab-separated rows: automaton line, reset length, strong-connectivity
// flag, irreducibility flag.
void write_reports(const std::vector<ReportRow>& reports, int n, int k,
                   const std::string& path);

// Writes pool.k<K>.aut, reports.k<K>.tsv and stats.k<K>.txt into the
// directory.
void write_stage_files(const RunResult& r, const std::string& workdir);

// Multi-line diagnostic: synchronization data, pair counts, sequence
// lengths, the rank-descent bound, and a bound line per one-cluster
// transformation in the semigroup next to the comparable closed forms.
std::string bound_report_text(const Automaton& a, uint64_t semigroup_cap);

}  // namespace resetsearch
