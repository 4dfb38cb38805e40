#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "franklpin/bounds.hpp"
#include "franklpin/sequence.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "synchro/pairs.hpp"
#include "synchro/reset.hpp"

using namespace resetsearch;
using resetsearch::testing::cerny;
using resetsearch::testing::make;
using resetsearch::testing::oracle_max_sequence;
using resetsearch::testing::random_automaton;
using resetsearch::testing::unary_full_sequence;

namespace {

SequenceItem item(std::initializer_list<int> set, int x, int y) {
  SequenceItem it;
  for (int q : set) it.set |= 1u << q;
  it.pair = {static_cast<uint8_t>(x), static_cast<uint8_t>(y)};
  return it;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) out.emplace_back(x, y);
  return out;
}

// Every n-state map whose square is itself or the identity.
std::vector<std::vector<int>> rule_rows(int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> img(n, 0);
  while (true) {
    bool idem = true, invol = true;
    for (int q = 0; q < n; ++q) {
      const int qq = img[img[q]];
      if (qq != img[q]) idem = false;
      if (qq != q) invol = false;
    }
    if (idem || invol) rows.push_back(img);
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n - 1) img[pos--] = 0;
    if (pos < 0) break;
    ++img[pos];
  }
  return rows;
}

Transformation nth_map(int n, int64_t code) {
  Transformation t;
  t.n = n;
  for (int q = 0; q < n; ++q) {
    t.image[q] = static_cast<uint8_t>(code % n);
    code /= n;
  }
  return t;
}

}  // namespace

TEST_CASE("sequence length limit is a binomial coefficient") {
  CHECK(frankl_limit(4, 2) == 6);
  CHECK(frankl_limit(4, 4) == 1);
  CHECK(frankl_limit(7, 2) == 21);
  CHECK(frankl_limit(7, 7) == 1);
  CHECK(frankl_limit(10, 2) == 45);
  CHECK(frankl_limit(16, 2) == 120);
  CHECK(frankl_limit(5, 3) == 6);
}

TEST_CASE("pair-pool compression bound") {
  CHECK(pairs_bound(7, 2, 6, 1) == 16);
  CHECK(pairs_bound(7, 2, 0, 0) == frankl_limit(7, 2));
  CHECK(pairs_bound(7, 2, frankl_limit(7, 2), 0) == 0);
  CHECK_THROWS_AS(pairs_bound(7, 2, frankl_limit(7, 2) + 1, 0),
                  std::invalid_argument);
}

TEST_CASE("rank-lowering word extension bound") {
  CHECK(pin_step(4, 4, 0) == 1);
  CHECK(pin_step(7, 4, 5) == 14);
  CHECK(pin_step(10, 2, 3) == 15);
}

TEST_CASE("sequence validation accepts and rejects correctly") {
  PairSequence good;
  good.n = 4;
  good.m = 3;
  good.items = {item({0, 1, 2}, 0, 1), item({0, 1, 3}, 0, 3)};
  CHECK(validate_sequence(good));

  PairSequence reordered = good;
  std::swap(reordered.items[0], reordered.items[1]);
  CHECK_FALSE(validate_sequence(reordered));  // (0,1) lies inside {0,1,3}

  PairSequence outside;
  outside.n = 4;
  outside.m = 3;
  outside.items = {item({0, 1, 2}, 0, 3)};
  CHECK_FALSE(validate_sequence(outside));  // pair not inside its set

  PairSequence wrong_size;
  wrong_size.n = 4;
  wrong_size.m = 3;
  wrong_size.items = {item({0, 1}, 0, 1)};
  CHECK_FALSE(validate_sequence(wrong_size));

  PairSequence off_universe;
  off_universe.n = 4;
  off_universe.m = 3;
  off_universe.items = {item({0, 1, 5}, 0, 1)};
  CHECK_FALSE(validate_sequence(off_universe));

  PairSequence degenerate;
  degenerate.n = 4;
  degenerate.m = 2;
  degenerate.items = {item({0, 1}, 1, 1)};
  CHECK_FALSE(validate_sequence(degenerate));
}

TEST_CASE("greedy sequences on simple pools") {
  CHECK(greedy_sequence({}, 2, 4).items.empty());

  PairSequence single = greedy_sequence({{0, 1}}, 2, 4);
  REQUIRE(single.items.size() == 1);
  CHECK(single.items[0].set == 0b0011u);
  CHECK(validate_sequence(single));

  PairSequence full = greedy_sequence(all_pairs(4), 2, 4);
  CHECK(static_cast<int64_t>(full.items.size()) == frankl_limit(4, 2));
  CHECK(validate_sequence(full));

  // With m = n the first set swallows every later pair.
  PairSequence whole = greedy_sequence(all_pairs(4), 4, 4);
  CHECK(static_cast<int64_t>(whole.items.size()) == frankl_limit(4, 4));
  CHECK(validate_sequence(whole));

  // Deterministic output.
  PairSequence again = greedy_sequence(all_pairs(4), 2, 4);
  REQUIRE(again.items.size() == full.items.size());
  for (size_t i = 0; i < full.items.size(); ++i) {
    CHECK(again.items[i].set == full.items[i].set);
    CHECK(again.items[i].pair == full.items[i].pair);
  }
}

TEST_CASE("random greedy sequences validate and respect the limit") {
  std::mt19937 rng(90217);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> pool;
    for (auto& pr : all_pairs(n))
      if (rng() % 5 < 2) pool.push_back(pr);
    const int m = 2 + static_cast<int>(rng() % (n - 1));
    PairSequence s = greedy_sequence(pool, m, n);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(validate_sequence(s));
    CHECK(static_cast<int64_t>(s.items.size()) <= frankl_limit(n, m));
    CHECK(s.items.size() <= pool.size());
  }
}

TEST_CASE("greedy never beats the exhaustive optimum") {
  CHECK(oracle_max_sequence({{0, 1}}, 2, 4) == 1);
  CHECK(oracle_max_sequence(all_pairs(4), 2, 4) == 6);
  CHECK(oracle_max_sequence(all_pairs(4), 4, 4) == 1);

  std::mt19937 rng(41523);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    auto pairs = all_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (pairs.size() > 6) pairs.resize(6);
    std::sort(pairs.begin(), pairs.end());
    const int m = 2 + static_cast<int>(rng() % (n - 1));
    const int64_t g =
        static_cast<int64_t>(greedy_sequence(pairs, m, n).items.size());
    const int best = oracle_max_sequence(pairs, m, n);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(g <= best);
    CHECK(best <= frankl_limit(n, m));
  }
}

TEST_CASE("merge statistics of single maps") {
  UnaryPairStats cycle = unary_stats(make(4, 1, {1, 2, 3, 0}).letter(0));
  CHECK(cycle.pairs.empty());
  CHECK(cycle.height == 0);
  CHECK(cycle.eventual_rank == 4);

  UnaryPairStats constant = unary_stats(make(4, 1, {0, 0, 0, 0}).letter(0));
  CHECK(constant.pairs.size() == 6);
  CHECK(constant.height == 1);
  CHECK(constant.eventual_rank == 1);

  UnaryPairStats chain = unary_stats(make(4, 1, {0, 0, 1, 2}).letter(0));
  CHECK(chain.pairs.size() == 6);
  CHECK(chain.height == 3);
  CHECK(chain.eventual_rank == 1);

  UnaryPairStats rho = unary_stats(make(5, 1, {1, 0, 1, 2, 3}).letter(0));
  std::vector<std::pair<int, int>> got = rho.pairs;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 3}, {2, 4}});
  CHECK(rho.height == 3);
  CHECK(rho.eventual_rank == 2);
}

TEST_CASE("merge statistics agree with the pair table on random maps") {
  std::mt19937 rng(55108);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Automaton a = random_automaton(rng, n, 1);
    CAPTURE(to_line(a));
    UnaryPairStats st = unary_stats(a.letter(0));
    PairTable t = compressible_pairs(a);
    auto want = t.compressible_list();
    auto got = st.pairs;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(st.height == sync_height(t));

    const int r = st.eventual_rank;
    CHECK(st.height <= n - r);
    CHECK(2 * static_cast<int64_t>(st.pairs.size()) * r >=
          static_cast<int64_t>(n) * (n - r));
  }
}

TEST_CASE("single maps admit a full-pool sequence at every subset size") {
  for (int n = 2; n <= 5; ++n) {
    int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    for (int64_t code = 0; code < total; ++code) {
      Transformation t = nth_map(n, code);
      UnaryPairStats st = unary_stats(t);
      for (int m = 2; m <= st.eventual_rank; ++m) {
        PairSequence s = unary_full_sequence(t, m);
        CAPTURE(n);
        CAPTURE(code);
        CAPTURE(m);
        CHECK(validate_sequence(s));
        CHECK(s.items.size() == st.pairs.size());
      }
    }
  }
  Transformation chain = make(4, 1, {0, 0, 1, 2}).letter(0);
  CHECK_THROWS_AS(unary_full_sequence(chain, 2), std::invalid_argument);
  Transformation cycle = make(4, 1, {1, 2, 3, 0}).letter(0);
  CHECK_THROWS_AS(unary_full_sequence(cycle, 1), std::invalid_argument);
  CHECK_THROWS_AS(unary_full_sequence(cycle, 5), std::invalid_argument);
}

TEST_CASE("rank descent on a single cycle letter") {
  Automaton a = make(4, 1, {1, 2, 3, 0});
  SyncAnalysis analysis = reset_analysis(a);
  PairTable table = compressible_pairs(a);
  CHECK(rank_descent_bound(a, analysis, table) == 10);
  CHECK(rank_descent_bound(a, analysis, table, {false, true}) == 11);
  CHECK(rank_descent_bound(a, analysis, table, {true, false}) == 10);
  CHECK_FALSE(rank_descent_bound(a, analysis, table, {false, false}));
}

TEST_CASE("rank descent collapses to the exact length when rank one is reached") {
  Automaton a = cerny(4);
  SyncAnalysis analysis = reset_analysis(a);
  PairTable table = compressible_pairs(a);
  CHECK(rank_descent_bound(a, analysis, table) == 9);
}

TEST_CASE("rank descent on a two-cycle with a tail") {
  Automaton a = make(5, 1, {1, 0, 1, 2, 3});
  SyncAnalysis analysis = reset_analysis(a);
  CHECK(analysis.min_rank == 2);
  CHECK(analysis.min_rank_word_length == 3);
  PairTable table = compressible_pairs(a);
  CHECK(rank_descent_bound(a, analysis, table) == 10);
}

TEST_CASE("alternating-letter rule detection") {
  // Identity twice: idempotent and involution at once.
  CHECK(alternating_letters_bound(make(3, 2, {0, 1, 2, 0, 1, 2})) == 4);
  // A swap and a constant: involution plus idempotent.
  CHECK(alternating_letters_bound(make(4, 2, {1, 0, 2, 3, 0, 0, 0, 0})) == 6);
  // Two swaps under the stricter rule.
  Automaton invols = make(4, 2, {1, 0, 2, 3, 0, 1, 3, 2});
  CHECK(alternating_letters_bound(invols, PairLetterRule::involution_only) == 6);
  // A constant letter is not an involution.
  Automaton mixed = make(4, 2, {1, 0, 2, 3, 0, 0, 0, 0});
  CHECK_FALSE(
      alternating_letters_bound(mixed, PairLetterRule::involution_only));
  // A four-cycle is neither idempotent nor an involution.
  CHECK_FALSE(alternating_letters_bound(cerny(4)));

  CHECK_THROWS_AS(alternating_letters_bound(make(3, 1, {0, 1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      alternating_letters_bound(make(2, 3, {0, 1, 0, 1, 0, 1})),
      std::invalid_argument);
}

TEST_CASE("alternating-letter bound holds for every qualifying automaton") {
  for (int n = 2; n <= 5; ++n) {
    const auto rows = rule_rows(n);
    int checked = 0, violations = 0, missing = 0;
    for (const auto& r0 : rows)
      for (const auto& r1 : rows) {
        std::vector<int> delta = r0;
        delta.insert(delta.end(), r1.begin(), r1.end());
        Automaton a = make_automaton(n, 2, delta);
        auto b = alternating_letters_bound(a);
        if (!b.has_value() || *b != 2 * n - 2) {
          ++missing;
          continue;
        }
        SyncAnalysis s = reset_analysis(a);
        if (!s.synchronizing) continue;
        ++checked;
        if (s.reset_length > 2 * n - 2) ++violations;
      }
    CAPTURE(n);
    CHECK(missing == 0);
    CHECK(violations == 0);
    CHECK(checked > 0);
  }
}

TEST_CASE("bound for synchronizing automata that are not strongly connected") {
  CHECK(non_strongly_connected_bound(5) == 10);
  CHECK(non_strongly_connected_bound(7) == 26);
  CHECK(non_strongly_connected_bound(8) == 37);
  CHECK_THROWS_AS(non_strongly_connected_bound(4), std::invalid_argument);
}

TEST_CASE("bound report summarizes both kinds of input") {
  BoundReport sync = bound_report(cerny(4));
  CHECK(sync.synchronizing);
  CHECK(sync.reset_length == 9);
  CHECK(sync.min_rank == 1);
  CHECK(sync.min_rank_word_length == 9);
  CHECK(sync.pair_count == 6);
  CHECK(sync.height == 6);
  CHECK(sync.sequence_lengths.empty());
  CHECK_FALSE(sync.descent_bound.has_value());

  BoundReport cyc = bound_report(make(4, 1, {1, 2, 3, 0}));
  CHECK_FALSE(cyc.synchronizing);
  CHECK(cyc.min_rank == 4);
  CHECK(cyc.pair_count == 0);
  CHECK(cyc.height == 0);
  REQUIRE(cyc.sequence_lengths.size() == 3);
  CHECK(cyc.sequence_lengths[0] == std::pair<int, int64_t>(4, 0));
  CHECK(cyc.sequence_lengths[2] == std::pair<int, int64_t>(2, 0));
  CHECK(cyc.descent_bound == 10);

  BoundReport rho = bound_report(make(5, 1, {1, 0, 1, 2, 3}));
  CHECK_FALSE(rho.synchronizing);
  CHECK(rho.min_rank == 2);
  CHECK(rho.pair_count == 4);
  CHECK(rho.height == 3);
  REQUIRE(rho.sequence_lengths.size() == 1);
  CHECK(rho.sequence_lengths[0] == std::pair<int, int64_t>(2, 4));
  CHECK(rho.descent_bound == 10);
}
