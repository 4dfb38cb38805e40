#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "resetsearch/resetsearch.h"

namespace {

struct Auto {
  rs_automaton* p = nullptr;
  explicit Auto(const char* line) { REQUIRE(rs_automaton_parse(line, &p) == RS_OK); }
  ~Auto() { rs_automaton_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  rs_string_free(s);
  return out;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / "resetsearch_capi_test";
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

const char* kCerny4 = "4 2 : 1 2 3 0 ; 1 1 2 3";
const char* kCycle4 = "4 1 : 1 2 3 0";

}  // namespace

TEST_CASE("version string is set") {
  REQUIRE(rs_version() != nullptr);
  CHECK(std::string(rs_version()).find('.') != std::string::npos);
}

TEST_CASE("parse, serialize, canonicalize") {
  Auto a(kCerny4);
  CHECK(rs_automaton_states(a.p) == 4);
  CHECK(rs_automaton_letters(a.p) == 2);

  char* line = nullptr;
  REQUIRE(rs_automaton_to_line(a.p, &line) == RS_OK);
  CHECK(take(line) == kCerny4);

  uint8_t buf[8] = {};
  REQUIRE(rs_automaton_table(a.p, buf, 8) == RS_OK);
  CHECK(buf[0] == 1);
  CHECK(buf[4] == 1);
  CHECK(rs_automaton_table(a.p, buf, 7) == RS_ERR_ARGUMENT);

  char* canon = nullptr;
  REQUIRE(rs_automaton_canonical_line(a.p, &canon) == RS_OK);
  const std::string canon_line = take(canon);
  rs_automaton* c = nullptr;
  REQUIRE(rs_automaton_parse(canon_line.c_str(), &c) == RS_OK);
  char* canon2 = nullptr;
  REQUIRE(rs_automaton_canonical_line(c, &canon2) == RS_OK);
  CHECK(take(canon2) == canon_line);  // canonicalizing is idempotent
  rs_automaton_free(c);
}

TEST_CASE("create from a raw table") {
  const uint8_t delta[4] = {1, 0, 0, 1};
  rs_automaton* a = nullptr;
  REQUIRE(rs_automaton_create(2, 2, delta, &a) == RS_OK);
  CHECK(rs_automaton_states(a) == 2);
  rs_automaton_free(a);

  const uint8_t bad[2] = {7, 0};
  rs_automaton* b = nullptr;
  CHECK(rs_automaton_create(2, 1, bad, &b) == RS_ERR_PARSE);
  CHECK(b == nullptr);
  CHECK(rs_automaton_create(2, 1, nullptr, &b) == RS_ERR_ARGUMENT);
}

TEST_CASE("parse failures set a message") {
  rs_automaton* a = nullptr;
  CHECK(rs_automaton_parse("4 2 ; 0", &a) == RS_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(rs_last_error()).size() > 0);
  CHECK(rs_automaton_parse(nullptr, &a) == RS_ERR_ARGUMENT);
  CHECK(rs_automaton_parse("2 1 : 0 5", &a) == RS_ERR_PARSE);
  CHECK(std::string(rs_last_error()).find("out of range") != std::string::npos);
}

TEST_CASE("reset analysis and word") {
  Auto a(kCerny4);
  rs_reset_result r = {};
  REQUIRE(rs_reset_analysis(a.p, &r) == RS_OK);
  CHECK(r.synchronizing == 1);
  CHECK(r.reset_length == 9);
  CHECK(r.min_rank == 1);
  CHECK(r.min_rank_word_length == 9);

  char* word = nullptr;
  REQUIRE(rs_reset_word(a.p, &word) == RS_OK);
  CHECK(take(word) == "100010001");

  Auto cyc(kCycle4);
  rs_reset_result rc = {};
  REQUIRE(rs_reset_analysis(cyc.p, &rc) == RS_OK);
  CHECK(rc.synchronizing == 0);
  CHECK(rc.reset_length == -1);
  CHECK(rc.min_rank == 4);
  char* none = nullptr;
  CHECK(rs_reset_word(cyc.p, &none) == RS_ERR_STATE);
  CHECK(none == nullptr);

  CHECK(rs_reset_analysis(nullptr, &r) == RS_ERR_ARGUMENT);
  CHECK(rs_reset_analysis(a.p, nullptr) == RS_ERR_ARGUMENT);
}

TEST_CASE("predicates return 1, 0 and -1") {
  Auto a(kCerny4);
  CHECK(rs_is_synchronizing(a.p) == 1);
  CHECK(rs_is_strongly_connected(a.p) == 1);
  CHECK(rs_is_irreducibly_synchronizing(a.p) == 1);

  Auto cyc(kCycle4);
  CHECK(rs_is_synchronizing(cyc.p) == 0);
  CHECK(rs_is_strongly_connected(cyc.p) == 1);
  CHECK(rs_is_irreducibly_synchronizing(cyc.p) == -1);
  CHECK(std::string(rs_last_error()).find("synchronizing") !=
        std::string::npos);

  CHECK(rs_is_synchronizing(nullptr) == -1);
}

TEST_CASE("bound report text") {
  Auto cyc(kCycle4);
  char* text = nullptr;
  REQUIRE(rs_bound_report_text(cyc.p, 1000, &text) == RS_OK);
  const std::string report = take(text);
  CHECK(report.find("rank_descent_bound: 10") != std::string::npos);
  CHECK(report.find("one_cluster_min: 10") != std::string::npos);
  CHECK(rs_bound_report_text(nullptr, 1000, &text) == RS_ERR_ARGUMENT);
}

TEST_CASE("cyclic vector tables and values") {
  char* text = nullptr;
  REQUIRE(rs_dstar_tables_text(12, &text) == RS_OK);
  const std::string tables = take(text);
  CHECK(tables.find("m=12  12 9 8 7 8 7 8 7 8 9 12  mid=71 total=95") !=
        std::string::npos);
  CHECK(rs_dstar_tables_text(25, &text) == RS_ERR_ARGUMENT);
  CHECK(rs_dstar_tables_text(12, nullptr) == RS_ERR_ARGUMENT);

  CHECK(rs_dstar_value(4, 2) == 3);
  CHECK(rs_dstar_value(12, 2) == 9);
  CHECK(rs_dstar_value(4, 9) == -1);
  CHECK(rs_sum_dstar(12) == 95);
  CHECK(rs_sum_dstar(1) == -1);
}

TEST_CASE("default sieve configuration") {
  rs_sieve_config cfg;
  rs_sieve_config_default(&cfg);
  CHECK(cfg.threshold == 1);
  CHECK(cfg.semigroup_cap == 2000000u);
  CHECK(cfg.assume_cerny_below == 1);
  CHECK(cfg.use_pairs_bound == 1);
  CHECK(cfg.use_pin_bound == 1);
  CHECK(cfg.use_one_cluster == 1);
  CHECK(cfg.use_reducible_generators == 1);
  CHECK(cfg.use_twin_pairs == 1);
  CHECK(cfg.use_alternating_letters == 1);
}

TEST_CASE("pool writing, extending and stats through files") {
  TempDir dir;
  rs_sieve_config cfg;
  rs_sieve_config_default(&cfg);
  cfg.threshold = 4;

  const std::string pool1 = dir.file("pool.k1.aut");
  REQUIRE(rs_write_unary_pool(3, &cfg, pool1.c_str()) == RS_OK);

  char* stats = nullptr;
  REQUIRE(rs_pool_stats_text(pool1.c_str(), &stats) == RS_OK);
  const std::string summary = take(stats);
  CHECK(summary.find("states 3") != std::string::npos);
  CHECK(summary.find("letters 1") != std::string::npos);

  const std::string pool2 = dir.file("pool.k2.aut");
  const std::string reports = dir.file("reports.k2.tsv");
  const std::string stats2 = dir.file("stats.k2.txt");
  REQUIRE(rs_extend_pool(pool1.c_str(), &cfg, 2, pool2.c_str(),
                         reports.c_str(), stats2.c_str()) == RS_OK);
  CHECK(std::filesystem::exists(pool2));
  CHECK(std::filesystem::exists(reports));
  CHECK(std::filesystem::exists(stats2));

  std::ifstream rep(reports);
  std::string line;
  size_t rows = 0;
  bool found_classic = false;
  while (std::getline(rep, line)) {
    ++rows;
    if (line.find("\t4\t1\t1") != std::string::npos) found_classic = true;
  }
  CHECK(rows > 0);
  CHECK(found_classic);

  std::ifstream st(stats2);
  std::string stats_text((std::istreambuf_iterator<char>(st)),
                         std::istreambuf_iterator<char>());
  CHECK(stats_text.find("generated\t") != std::string::npos);

  CHECK(rs_extend_pool(dir.file("missing.aut").c_str(), &cfg, 1,
                       nullptr, nullptr, nullptr) == RS_ERR_IO);
  CHECK(rs_write_unary_pool(9, &cfg, pool1.c_str()) == RS_ERR_ARGUMENT);
  // A null config means defaults.
  CHECK(rs_write_unary_pool(3, nullptr, pool1.c_str()) == RS_OK);
}

TEST_CASE("whole search writes stage files") {
  TempDir dir;
  rs_sieve_config cfg;
  rs_sieve_config_default(&cfg);
  cfg.threshold = 4;
  REQUIRE(rs_search(3, 2, &cfg, 2, dir.path.string().c_str()) == RS_OK);
  for (const char* name : {"pool.k1.aut", "pool.k2.aut", "reports.k2.tsv",
                           "stats.k1.txt", "stats.k2.txt"})
    CHECK(std::filesystem::exists(dir.path / name));
  CHECK(rs_search(0, 2, &cfg, 1, dir.path.string().c_str()) ==
        RS_ERR_ARGUMENT);
}
