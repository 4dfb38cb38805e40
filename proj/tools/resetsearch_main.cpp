#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resetsearch/resetsearch.h"

namespace {

struct SieveFlags {
  int threshold = 1;
  uint64_t semigroup_cap = 2'000'000;
  bool no_frankl = false;
  bool no_pin = false;
  bool no_one_cluster = false;
  bool no_reducible = false;
  bool no_twin_pairs = false;
  bool no_alternating = false;
  bool no_assume_cerny = false;
};

void add_sieve_flags(CLI::App* cmd, SieveFlags& f) {
  cmd->add_option("--threshold", f.threshold,
                  "report reset lengths at least this value")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--semigroup-cap", f.semigroup_cap,
                  "entry cap for semigroup closures");
  cmd->add_flag("--no-frankl", f.no_frankl,
                "drop the pair-sequence part of the rank-descent bound");
  cmd->add_flag("--no-pin", f.no_pin,
                "drop the rank-step part of the rank-descent bound");
  cmd->add_flag("--no-one-cluster", f.no_one_cluster,
                "skip the semigroup one-cluster scan");
  cmd->add_flag("--no-reducible", f.no_reducible,
                "keep automata with reducible generating sets");
  cmd->add_flag("--no-twin-pairs", f.no_twin_pairs,
                "disable the twin-pair reporting fast path");
  cmd->add_flag("--no-alternating", f.no_alternating,
                "disable the two-letter alternation fast path");
  cmd->add_flag("--no-assume-cerny", f.no_assume_cerny,
                "do not assume the conjectured reset bound for smaller sizes");
}

rs_sieve_config to_config(const SieveFlags& f) {
  rs_sieve_config cfg;
  rs_sieve_config_default(&cfg);
  cfg.threshold = f.threshold;
  cfg.semigroup_cap = f.semigroup_cap;
  cfg.use_pairs_bound = f.no_frankl ? 0 : 1;
  cfg.use_pin_bound = f.no_pin ? 0 : 1;
  cfg.use_one_cluster = f.no_one_cluster ? 0 : 1;
  cfg.use_reducible_generators = f.no_reducible ? 0 : 1;
  cfg.use_twin_pairs = f.no_twin_pairs ? 0 : 1;
  cfg.use_alternating_letters = f.no_alternating ? 0 : 1;
  cfg.assume_cerny_below = f.no_assume_cerny ? 0 : 1;
  return cfg;
}

int exit_code(rs_status s) { return s == RS_ERR_ARGUMENT ? 1 : 2; }

int report_error(rs_status s) {
  std::fprintf(stderr, "error: %s\n", rs_last_error());
  return exit_code(s);
}

// Applies fn to every non-empty, non-comment line of the file, parsed as an
// automaton. Returns 0 or the exit code of the first failure.
int for_each_automaton(const std::string& path,
                       const std::function<int(rs_automaton*)>& fn) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
    return 2;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    rs_automaton* a = nullptr;
    rs_status s = rs_automaton_parse(line.c_str(), &a);
    if (s != RS_OK) {
      std::fprintf(stderr, "error: %s:%d: %s\n", path.c_str(), lineno,
                   rs_last_error());
      return 2;
    }
    int rc = fn(a);
    rs_automaton_free(a);
    if (rc != 0) return rc;
  }
  return 0;
}

int print_owned(rs_status s, char* text) {
  if (s != RS_OK) return report_error(s);
  if (text) {
    std::fputs(text, stdout);
    rs_string_free(text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "search for strongly connected, irreducibly synchronizing automata "
      "with long shortest reset words"};
  app.set_version_flag("--version", rs_version());
  app.require_subcommand(1);

  int n = 0, k = 2, jobs = 1, max_m = 12;
  std::string in_path, out_path, report_path, stats_path, workdir;
  SieveFlags flags;

  CLI::App* unary = app.add_subcommand(
      "unary", "enumerate and sieve the one-letter automata");
  unary->add_option("--n", n, "number of states")->required();
  unary->add_option("--out", out_path, "pool file to write")->required();
  add_sieve_flags(unary, flags);

  CLI::App* extend = app.add_subcommand(
      "extend", "sieve every one-letter extension of a pool");
  extend->add_option("--in", in_path, "pool file to read")->required();
  extend->add_option("--out", out_path, "pool file for kept automata");
  extend->add_option("--report", report_path, "report file to write");
  extend->add_option("--stats", stats_path, "stats file to write");
  extend->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  add_sieve_flags(extend, flags);

  CLI::App* search = app.add_subcommand(
      "search", "full pipeline from one letter up to k letters");
  search->add_option("--n", n, "number of states")->required();
  search->add_option("--k", k, "number of letters")->required();
  search->add_option("--workdir", workdir, "directory for stage files")
      ->required();
  search->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  add_sieve_flags(search, flags);

  CLI::App* bound = app.add_subcommand(
      "bound", "print reset-length bounds for each automaton in a file");
  bound->add_option("--in", in_path, "file with one automaton per line")
      ->required();
  bound->add_option("--semigroup-cap", flags.semigroup_cap,
                    "entry cap for semigroup closures");

  CLI::App* reset = app.add_subcommand(
      "reset", "print exact synchronization data for each automaton");
  reset->add_option("--in", in_path, "file with one automaton per line")
      ->required();

  CLI::App* dstar = app.add_subcommand(
      "dstar", "print the cyclic-vector bound tables");
  dstar->add_option("--max-m", max_m, "largest cycle length")
      ->check(CLI::Range(2, 24));

  CLI::App* stats = app.add_subcommand("stats", "summarize a pool file");
  stats->add_option("--in", in_path, "pool file to read")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  rs_sieve_config cfg = to_config(flags);

  if (unary->parsed()) {
    rs_status s = rs_write_unary_pool(n, &cfg, out_path.c_str());
    return s == RS_OK ? 0 : report_error(s);
  }

  if (extend->parsed()) {
    rs_status s = rs_extend_pool(
        in_path.c_str(), &cfg, jobs, out_path.empty() ? nullptr : out_path.c_str(),
        report_path.empty() ? nullptr : report_path.c_str(),
        stats_path.empty() ? nullptr : stats_path.c_str());
    return s == RS_OK ? 0 : report_error(s);
  }

  if (search->parsed()) {
    rs_status s = rs_search(n, k, &cfg, jobs, workdir.c_str());
    return s == RS_OK ? 0 : report_error(s);
  }

  if (bound->parsed()) {
    return for_each_automaton(in_path, [&](rs_automaton* a) {
      char* line = nullptr;
      rs_status s = rs_automaton_to_line(a, &line);
      if (s != RS_OK) return report_error(s);
      std::printf("automaton: %s\n", line);
      rs_string_free(line);
      char* text = nullptr;
      s = rs_bound_report_text(a, cfg.semigroup_cap, &text);
      return print_owned(s, text);
    });
  }

  if (reset->parsed()) {
    return for_each_automaton(in_path, [&](rs_automaton* a) {
      char* line = nullptr;
      rs_status s = rs_automaton_to_line(a, &line);
      if (s != RS_OK) return report_error(s);
      std::printf("automaton: %s\n", line);
      rs_string_free(line);
      rs_reset_result r;
      s = rs_reset_analysis(a, &r);
      if (s != RS_OK) return report_error(s);
      std::printf("synchronizing: %s\n", r.synchronizing ? "yes" : "no");
      if (r.synchronizing) {
        std::printf("reset_length: %d\n", r.reset_length);
        char* word = nullptr;
        s = rs_reset_word(a, &word);
        if (s != RS_OK) return report_error(s);
        std::printf("reset_word: %s\n", word);
        rs_string_free(word);
      }
      std::printf("min_rank: %d\n", r.min_rank);
      std::printf("min_rank_word_length: %d\n", r.min_rank_word_length);
      return 0;
    });
  }

  if (dstar->parsed()) {
    char* text = nullptr;
    rs_status s = rs_dstar_tables_text(max_m, &text);
    return print_owned(s, text);
  }

  if (stats->parsed()) {
    char* text = nullptr;
    rs_status s = rs_pool_stats_text(in_path.c_str(), &text);
    return print_owned(s, text);
  }

  return 1;
}
