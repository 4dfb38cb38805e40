#include "resetsearch/resetsearch.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/automaton.hpp"
#include "core/canonical.hpp"
#include "generator/generate.hpp"
#include "generator/pool.hpp"
#include "onecluster/bounds.hpp"
#include "onecluster/circulant.hpp"
#include "sieve/run.hpp"
#include "synchro/pairs.hpp"
#include "synchro/reset.hpp"

struct rs_automaton {
  resetsearch::Automaton impl;
};

namespace {

thread_local std::string g_error;

rs_status fail(rs_status code, const char* msg) {
  g_error = msg;
  return code;
}

// Runs the body and converts exceptions into status codes.
template <typename F>
rs_status guarded(F&& body) {
  try {
    body();
    g_error.clear();
    return RS_OK;
  } catch (const resetsearch::ParseError& e) {
    return fail(RS_ERR_PARSE, e.what());
  } catch (const resetsearch::IoError& e) {
    return fail(RS_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RS_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RS_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(RS_ERR_STATE, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

resetsearch::SieveConfig to_config(const rs_sieve_config* cfg) {
  resetsearch::SieveConfig out;
  if (!cfg) return out;
  out.threshold = cfg->threshold;
  out.semigroup_cap = cfg->semigroup_cap;
  out.assume_cerny_below = cfg->assume_cerny_below != 0;
  out.use_pairs_bound = cfg->use_pairs_bound != 0;
  out.use_pin_bound = cfg->use_pin_bound != 0;
  out.use_one_cluster = cfg->use_one_cluster != 0;
  out.use_reducible_generators = cfg->use_reducible_generators != 0;
  out.use_twin_pairs = cfg->use_twin_pairs != 0;
  out.use_alternating_letters = cfg->use_alternating_letters != 0;
  return out;
}

int predicate(const rs_automaton* a, bool (*fn)(const resetsearch::Automaton&)) {
  if (!a) {
    g_error = "null automaton";
    return -1;
  }
  try {
    bool v = fn(a->impl);
    g_error.clear();
    return v ? 1 : 0;
  } catch (const std::exception& e) {
    g_error = e.what();
    return -1;
  }
}

}  // namespace

extern "C" {

const char* rs_last_error(void) { return g_error.c_str(); }

const char* rs_version(void) { return "0.1.0"; }

rs_status rs_automaton_parse(const char* line, rs_automaton** out) {
  if (!line || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto* handle = new rs_automaton{resetsearch::parse_line(line)};
    *out = handle;
  });
}

rs_status rs_automaton_create(int n, int k, const uint8_t* delta,
                              rs_automaton** out) {
  if (!delta || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<int> table(delta, delta + static_cast<size_t>(n) * k);
    auto* handle = new rs_automaton{resetsearch::make_automaton(n, k, table)};
    *out = handle;
  });
}

void rs_automaton_free(rs_automaton* a) { delete a; }

int rs_automaton_states(const rs_automaton* a) { return a ? a->impl.n : 0; }

int rs_automaton_letters(const rs_automaton* a) { return a ? a->impl.k : 0; }

rs_status rs_automaton_table(const rs_automaton* a, uint8_t* buf, size_t len) {
  if (!a || !buf) return fail(RS_ERR_ARGUMENT, "null argument");
  if (len < a->impl.delta.size())
    return fail(RS_ERR_ARGUMENT, "buffer too small");
  std::memcpy(buf, a->impl.delta.data(), a->impl.delta.size());
  g_error.clear();
  return RS_OK;
}

rs_status rs_automaton_to_line(const rs_automaton* a, char** out) {
  if (!a || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(resetsearch::to_line(a->impl)); });
}

rs_status rs_automaton_canonical_line(const rs_automaton* a, char** out) {
  if (!a || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<uint8_t> canon = resetsearch::canonical_form(a->impl);
    *out = dup_string(resetsearch::to_line(
        resetsearch::from_table_bytes(a->impl.n, a->impl.k, canon)));
  });
}

void rs_string_free(char* s) { std::free(s); }

rs_status rs_reset_analysis(const rs_automaton* a, rs_reset_result* out) {
  if (!a || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    resetsearch::SyncAnalysis s = resetsearch::reset_analysis(a->impl);
    out->synchronizing = s.synchronizing ? 1 : 0;
    out->reset_length = s.reset_length;
    out->min_rank = s.min_rank;
    out->min_rank_word_length = s.min_rank_word_length;
  });
}

rs_status rs_reset_word(const rs_automaton* a, char** out) {
  if (!a || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    resetsearch::SyncAnalysis s = resetsearch::reset_analysis(a->impl);
    if (!s.synchronizing) throw std::runtime_error("not synchronizing");
    std::ostringstream text;
    for (size_t i = 0; i < s.reset_word.size(); ++i) {
      if (a->impl.k > 10 && i) text << ',';
      text << int(s.reset_word[i]);
    }
    *out = dup_string(text.str());
  });
}

int rs_is_synchronizing(const rs_automaton* a) {
  return predicate(a, [](const resetsearch::Automaton& x) {
    return resetsearch::is_synchronizing(x);
  });
}

int rs_is_strongly_connected(const rs_automaton* a) {
  return predicate(a, [](const resetsearch::Automaton& x) {
    return resetsearch::is_strongly_connected(x);
  });
}

int rs_is_irreducibly_synchronizing(const rs_automaton* a) {
  return predicate(a, [](const resetsearch::Automaton& x) {
    return resetsearch::is_irreducibly_synchronizing(x);
  });
}

rs_status rs_bound_report_text(const rs_automaton* a, uint64_t semigroup_cap,
                               char** out) {
  if (!a || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(resetsearch::bound_report_text(a->impl, semigroup_cap));
  });
}

rs_status rs_dstar_tables_text(int max_m, char** out) {
  if (!out) return fail(RS_ERR_ARGUMENT, "null argument");
  if (max_m > 24) return fail(RS_ERR_ARGUMENT, "max_m above 24");
  return guarded([&] {
    *out = dup_string(resetsearch::dstar_tables_text(max_m));
  });
}

int rs_dstar_value(int m, int k) {
  try {
    int v = resetsearch::dstar(m, k);
    g_error.clear();
    return v;
  } catch (const std::exception& e) {
    g_error = e.what();
    return -1;
  }
}

int64_t rs_sum_dstar(int m) {
  try {
    int64_t v = resetsearch::sum_dstar(m);
    g_error.clear();
    return v;
  } catch (const std::exception& e) {
    g_error = e.what();
    return -1;
  }
}

void rs_sieve_config_default(rs_sieve_config* cfg) {
  if (!cfg) return;
  resetsearch::SieveConfig def;
  cfg->threshold = def.threshold;
  cfg->semigroup_cap = def.semigroup_cap;
  cfg->assume_cerny_below = def.assume_cerny_below ? 1 : 0;
  cfg->use_pairs_bound = def.use_pairs_bound ? 1 : 0;
  cfg->use_pin_bound = def.use_pin_bound ? 1 : 0;
  cfg->use_one_cluster = def.use_one_cluster ? 1 : 0;
  cfg->use_reducible_generators = def.use_reducible_generators ? 1 : 0;
  cfg->use_twin_pairs = def.use_twin_pairs ? 1 : 0;
  cfg->use_alternating_letters = def.use_alternating_letters ? 1 : 0;
}

rs_status rs_write_unary_pool(int n, const rs_sieve_config* cfg,
                              const char* pool_path) {
  if (!pool_path) return fail(RS_ERR_ARGUMENT, "null pool path");
  return guarded([&] {
    resetsearch::RunResult r =
        resetsearch::sieve_pool(resetsearch::enumerate_unary(n), to_config(cfg));
    resetsearch::write_pool(r.pool, pool_path);
  });
}

rs_status rs_extend_pool(const char* pool_in_path, const rs_sieve_config* cfg,
                         int jobs, const char* pool_out_path,
                         const char* reports_path, const char* stats_path) {
  if (!pool_in_path) return fail(RS_ERR_ARGUMENT, "null pool path");
  return guarded([&] {
    resetsearch::Pool in = resetsearch::read_pool(pool_in_path);
    resetsearch::RunResult r =
        resetsearch::run_extension(in, to_config(cfg), jobs);
    if (pool_out_path) resetsearch::write_pool(r.pool, pool_out_path);
    if (reports_path)
      resetsearch::write_reports(r.reports, r.n, r.k, reports_path);
    if (stats_path) {
      std::ofstream outfile(stats_path);
      if (!outfile)
        throw resetsearch::IoError(std::string("cannot open ") + stats_path +
                                   " for writing");
      outfile << r.stats.text();
      outfile.flush();
      if (!outfile)
        throw resetsearch::IoError(std::string("write failed for ") +
                                   stats_path);
    }
  });
}

rs_status rs_search(int n, int k, const rs_sieve_config* cfg, int jobs,
                    const char* workdir) {
  if (!workdir) return fail(RS_ERR_ARGUMENT, "null workdir");
  return guarded([&] {
    std::vector<resetsearch::RunResult> stages =
        resetsearch::pipeline(n, k, to_config(cfg), jobs);
    for (const resetsearch::RunResult& r : stages)
      resetsearch::write_stage_files(r, workdir);
  });
}

rs_status rs_pool_stats_text(const char* pool_path, char** out) {
  if (!pool_path || !out) return fail(RS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    resetsearch::Pool p = resetsearch::read_pool(pool_path);
    std::ostringstream text;
    text << "states " << p.n << ", letters " << p.k << ", members "
         << p.members.size() << '\n';
    *out = dup_string(text.str());
  });
}

}  // extern "C"
