#include "sieve/run.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "core/canonical.hpp"
#include "core/profile.hpp"
#include "franklpin/bounds.hpp"
#include "generator/generate.hpp"
#include "onecluster/bounds.hpp"
#include "onecluster/circulant.hpp"
#include "semigroup/semigroup.hpp"
#include "synchro/pairs.hpp"
#include "synchro/reset.hpp"

namespace resetsearch {

namespace {

// Concurrent membership set for canonical tables. Tables short enough to
// pack into 128 bits (4 bits per cell) use integer keys; longer ones fall
// back to strings.
class DedupStore {
 public:
  DedupStore(int n, int k) : packed_(n * k <= 32) {}

  // True when the table was absent and is now stored.
  bool insert(const std::vector<uint8_t>& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : bytes) h = (h ^ b) * 1099511628211ull;
    Shard& s = shards_[h & (kShards - 1)];
    std::lock_guard<std::mutex> g(s.mu);
    if (packed_) return s.keys.insert(pack(bytes)).second;
    return s.raw.insert(std::string(bytes.begin(), bytes.end())).second;
  }

 private:
  struct Key {
    uint64_t lo = 0, hi = 0;
    bool operator==(const Key& o) const { return lo == o.lo && hi == o.hi; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      uint64_t x = k.lo ^ (k.hi * 0x9e3779b97f4a7c15ull);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      return static_cast<size_t>(x);
    }
  };
  static Key pack(const std::vector<uint8_t>& bytes) {
    Key k;
    for (size_t i = 0; i < bytes.size(); ++i) {
      uint64_t nib = bytes[i];
      if (i < 16)
        k.lo |= nib << (4 * i);
      else
        k.hi |= nib << (4 * (i - 16));
    }
    return k;
  }

  static constexpr size_t kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_set<Key, KeyHash> keys;
    std::unordered_set<std::string> raw;
  };
  bool packed_;
  Shard shards_[kShards];
};

struct WorkerOutput {
  RunStats stats;
  std::vector<ReportRow> reports;
  std::vector<std::vector<uint8_t>> stored;
};

void tally(const Automaton& canon, const Verdict& v, WorkerOutput& out) {
  ++out.stats.generated;
  switch (v.kind) {
    case Verdict::Kind::report: {
      ++out.stats.reported;
      ReportRow row;
      row.table = canon.delta;
      row.reset_length = v.reset_length;
      out.reports.push_back(std::move(row));
      break;
    }
    case Verdict::Kind::store:
      ++out.stats.stored;
      out.stored.push_back(canon.delta);
      break;
    case Verdict::Kind::drop:
      switch (v.reason) {
        case DropReason::bound_rank_descent:
          ++out.stats.dropped_rank_descent;
          break;
        case DropReason::bound_one_cluster:
          ++out.stats.dropped_one_cluster;
          break;
        case DropReason::reducible_generators:
          ++out.stats.dropped_reducible_generators;
          break;
        case DropReason::not_reportable:
          ++out.stats.not_reportable;
          break;
      }
      break;
  }
}

void finish_result(RunResult& out, std::vector<WorkerOutput>& parts) {
  for (WorkerOutput& w : parts) {
    out.stats += w.stats;
    out.reports.insert(out.reports.end(),
                       std::make_move_iterator(w.reports.begin()),
                       std::make_move_iterator(w.reports.end()));
    out.pool.members.insert(out.pool.members.end(),
                            std::make_move_iterator(w.stored.begin()),
                            std::make_move_iterator(w.stored.end()));
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const ReportRow& a, const ReportRow& b) { return a.table < b.table; });
  std::sort(out.pool.members.begin(), out.pool.members.end());
}

}  // namespace

bool RunStats::conserved() const {
  return generated == reported + not_reportable + dropped_rank_descent +
                          dropped_one_cluster + dropped_reducible_generators +
                          stored;
}

RunStats& RunStats::operator+=(const RunStats& o) {
  generated += o.generated;
  reported += o.reported;
  not_reportable += o.not_reportable;
  dropped_rank_descent += o.dropped_rank_descent;
  dropped_one_cluster += o.dropped_one_cluster;
  dropped_reducible_generators += o.dropped_reducible_generators;
  stored += o.stored;
  return *this;
}

std::string RunStats::text() const {
  std::ostringstream out;
  out << "generated\t" << generated << '\n'
      << "reported\t" << reported << '\n'
      << "not_reportable\t" << not_reportable << '\n'
      << "dropped_rank_descent\t" << dropped_rank_descent << '\n'
      << "dropped_one_cluster\t" << dropped_one_cluster << '\n'
      << "dropped_reducible_generators\t" << dropped_reducible_generators << '\n'
      << "stored\t" << stored << '\n';
  return out.str();
}

RunResult sieve_pool(const Pool& in, const SieveConfig& cfg) {
  RunResult out;
  out.n = in.n;
  out.k = in.k;
  out.pool.n = in.n;
  out.pool.k = in.k;
  WorkerOutput w;
  for (const auto& bytes : in.members) {
    Automaton a = from_table_bytes(in.n, in.k, bytes);
    tally(a, sieve(a, cfg), w);
  }
  std::vector<WorkerOutput> parts;
  parts.push_back(std::move(w));
  finish_result(out, parts);
  return out;
}

RunResult run_extension(const Pool& in, const SieveConfig& cfg, int jobs) {
  if (in.n < 1) throw std::invalid_argument("run_extension: empty pool shape");
  if (in.n > 12)
    throw std::invalid_argument("run_extension: too many states to enumerate");
  RunResult out;
  out.n = in.n;
  out.k = in.k + 1;
  out.pool.n = in.n;
  out.pool.k = out.k;
  if (in.members.empty()) return out;
  if (jobs < 1) jobs = 1;

  const int n = in.n;
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<uint64_t>(n);
  const uint64_t chunk = 4096;
  const uint64_t chunks_per_parent = (total + chunk - 1) / chunk;
  const uint64_t units = in.members.size() * chunks_per_parent;

  // Shared caches are filled up front so workers only read them.
  dstar_prebuild(n);

  DedupStore store(n, out.k);
  std::atomic<uint64_t> next{0};
  std::vector<WorkerOutput> parts(jobs);

  auto work = [&](WorkerOutput& w) {
    Automaton child;
    child.n = n;
    child.k = out.k;
    const size_t base = in.members[0].size();
    child.delta.resize(base + n);
    for (;;) {
      uint64_t unit = next.fetch_add(1);
      if (unit >= units) break;
      const auto& parent = in.members[unit / chunks_per_parent];
      std::copy(parent.begin(), parent.end(), child.delta.begin());
      const uint64_t lo = (unit % chunks_per_parent) * chunk;
      const uint64_t hi = std::min(lo + chunk, total);
      for (uint64_t cand = lo; cand < hi; ++cand) {
        uint64_t digits = cand;
        for (int q = n - 1; q >= 0; --q) {
          child.delta[base + q] = static_cast<uint8_t>(digits % n);
          digits /= n;
        }
        std::vector<uint8_t> canon = canonical_form(child);
        if (!store.insert(canon)) continue;
        Automaton rep = from_table_bytes(n, out.k, canon);
        tally(rep, sieve(rep, cfg), w);
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int j = 0; j < jobs; ++j) threads.emplace_back(work, std::ref(parts[j]));
  for (auto& t : threads) t.join();

  finish_result(out, parts);
  return out;
}

std::vector<RunResult> pipeline(int n, int k, const SieveConfig& cfg, int jobs) {
  if (k < 1) throw std::invalid_argument("pipeline: need at least one letter");
  std::vector<RunResult> stages;
  stages.push_back(sieve_pool(enumerate_unary(n), cfg));
  for (int i = 2; i <= k; ++i)
    stages.push_back(run_extension(stages.back().pool, cfg, jobs));
  return stages;
}

void write_reports(const std::vector<ReportRow>& reports, int n, int k,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const ReportRow& r : reports)
    out << to_line(from_table_bytes(n, k, r.table)) << '\t' << r.reset_length
        << '\t' << int(r.strongly_connected) << '\t' << int(r.irreducible)
        << '\n';
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

void write_stage_files(const RunResult& r, const std::string& workdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(workdir, ec);
  const std::string suffix = ".k" + std::to_string(r.k);
  write_pool(r.pool, (fs::path(workdir) / ("pool" + suffix + ".aut")).string());
  write_reports(r.reports, r.n, r.k,
                (fs::path(workdir) / ("reports" + suffix + ".tsv")).string());
  const std::string stats_path =
      (fs::path(workdir) / ("stats" + suffix + ".txt")).string();
  std::ofstream out(stats_path);
  if (!out) throw IoError("cannot open " + stats_path + " for writing");
  out << r.stats.text();
  out.flush();
  if (!out) throw IoError("write failed for " + stats_path);
}

std::string bound_report_text(const Automaton& a, uint64_t semigroup_cap) {
  std::ostringstream out;
  BoundReport rep = bound_report(a);
  out << "states: " << a.n << "\nletters: " << a.k << '\n';
  out << "synchronizing: " << (rep.synchronizing ? "yes" : "no") << '\n';
  if (rep.synchronizing) out << "reset_length: " << rep.reset_length << '\n';
  out << "min_rank: " << rep.min_rank << '\n'
      << "min_rank_word_length: " << rep.min_rank_word_length << '\n'
      << "compressible_pairs: " << rep.pair_count << '\n'
      << "pair_height: " << rep.height << '\n';
  for (const auto& [r, len] : rep.sequence_lengths)
    out << "sequence r=" << r << ": p=" << len << '\n';
  if (rep.descent_bound)
    out << "rank_descent_bound: " << *rep.descent_bound << '\n';

  SemigroupTable table = enumerate_semigroup(a, semigroup_cap);
  out << "semigroup: " << table.entries.size() << " entries"
      << (table.complete ? "" : " (capped)") << '\n';
  constexpr int kMaxLines = 200;
  int lines = 0;
  uint64_t skipped = 0;
  std::optional<int64_t> best;
  for (const auto& [key, s] : table.entries) {
    OneClusterProfile p = functional_profile(unpack_transformation(key, a.n));
    if (!p.one_cluster || p.cycle_length < 2) continue;
    // Report the same figure the scan prunes with: no tail-sink subtraction,
    // which is reachable by explicit extensions and so not a valid bound.
    int64_t b = one_cluster_bound(a.n, p.cycle_length, p.level, s, false);
    if (!best || b < *best) best = b;
    if (lines >= kMaxLines) {
      ++skipped;
      continue;
    }
    ++lines;
    out << "one_cluster len=" << s << " cycle=" << p.cycle_length
        << " level=" << p.level << " bound=" << b
        << " closed_form=" << one_cluster_closed_form(a.n, p.cycle_length)
        << " steinberg=" << steinberg_bound(a.n, p.cycle_length, p.level)
        << " carpi_dalessandro="
        << carpi_dalessandro_bound(a.n, p.cycle_length) << '\n';
  }
  if (skipped) out << "one_cluster_omitted: " << skipped << '\n';
  if (best) out << "one_cluster_min: " << *best << '\n';
  return out.str();
}

}  // namespace resetsearch
