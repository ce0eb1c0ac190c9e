#include "kellymod.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "incidence.hpp"
#include "suite.hpp"
#include "verify_graphs.hpp"
#include "verify_sets.hpp"
#include "verify_tournaments.hpp"

using namespace kellymod;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

km_status fail(km_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <class Fn>
km_status guarded(Fn&& fn) {
  try {
    fn();
    return KM_OK;
  } catch (const ParseError& e) {
    return fail(KM_ERR_PARSE, e.what());
  } catch (const std::length_error& e) {
    return fail(KM_ERR_RESOURCE, e.what());
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    if (what.rfind("unknown theorem id", 0) == 0) return fail(KM_ERR_UNKNOWN_ID, e.what());
    return fail(KM_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(KM_ERR_ARGUMENT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(KM_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(KM_ERR_INTERNAL, e.what());
  }
}

Json diagonal_spec_json(const DiagonalSpec& spec) {
  Json factors = Json::array();
  for (const auto& [value, mult] : spec.entries)
    factors.push_back({{"value", value.get_str()}, {"mult", mult}});
  return Json{{"rows", spec.rows}, {"cols", spec.cols}, {"factors", factors}};
}

VerifyOptions parse_options(const char* options_json) {
  VerifyOptions opts;
  if (!options_json || !*options_json) return opts;
  Json j = Json::parse(options_json);
  if (j.contains("seed")) opts.seed = j.at("seed").get<uint64_t>();
  if (j.contains("threads")) opts.threads = j.at("threads").get<unsigned>();
  if (j.contains("sample_cap")) opts.sample_cap = j.at("sample_cap").get<uint64_t>();
  if (j.contains("route")) {
    std::string r = j.at("route").get<std::string>();
    if (r == "exhaustive")
      opts.forced_route = Route::Exhaustive;
    else if (r == "sampled")
      opts.forced_route = Route::Sampled;
    else if (r == "kernel")
      opts.forced_route = Route::Kernel;
    else if (r == "constructed")
      opts.forced_route = Route::Constructed;
    else
      throw std::invalid_argument("unknown route: " + r);
  }
  return opts;
}

}  // namespace

extern "C" {

const char* km_version(void) { return "0.1.0"; }

const char* km_last_error(void) { return g_last_error.c_str(); }

void km_string_free(char* s) { std::free(s); }

km_status km_binomial(uint32_t n, int64_t r, char** out_decimal) {
  if (!out_decimal) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out_decimal = dup_string(binomial(n, r).get_str()); });
}

km_status km_binomial_mod_p(uint64_t k, uint64_t t, uint32_t p, uint32_t* out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = binomial_mod_p_lucas(k, t, p); });
}

km_status km_p_divides_binomial(uint64_t k, uint64_t t, uint32_t p, int* out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = p_divides_binomial(k, t, p) ? 1 : 0; });
}

km_status km_digits_base_p(uint64_t n, uint32_t p, uint32_t* digits, size_t* inout_len) {
  if (!digits || !inout_len) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] {
    DigitVector d = digits_base_p(n, p);
    if (d.digits.size() > *inout_len) throw std::invalid_argument("digit buffer too small");
    for (size_t i = 0; i < d.digits.size(); ++i) digits[i] = d.digits[i];
    *inout_len = d.digits.size();
  });
}

km_status km_subset_rank(uint32_t mask, uint64_t* out_rank) {
  if (!out_rank) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out_rank = subset_rank(mask); });
}

km_status km_subset_unrank(uint64_t rank, uint32_t card, uint32_t v, uint32_t* out_mask) {
  if (!out_mask) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out_mask = subset_unrank(rank, card, v); });
}

struct km_matrix {
  IntegerMatrix m;
};

km_status km_inclusion_matrix(uint32_t v, uint32_t t, uint32_t k, km_matrix** out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = new km_matrix{build_inclusion_matrix(v, t, k).to_integer()}; });
}

km_status km_kneser_matrix(uint32_t t, uint32_t v, km_matrix** out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = new km_matrix{kneser_adjacency(t, v)}; });
}

void km_matrix_free(km_matrix* m) { delete m; }

uint64_t km_matrix_rows(const km_matrix* m) { return m ? m->m.rows() : 0; }
uint64_t km_matrix_cols(const km_matrix* m) { return m ? m->m.cols() : 0; }

km_status km_matrix_entry(const km_matrix* m, uint64_t i, uint64_t j, int64_t* out) {
  if (!m || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  if (i >= m->m.rows() || j >= m->m.cols()) return fail(KM_ERR_ARGUMENT, "index out of range");
  return guarded([&] { *out = static_cast<int64_t>(m->m.get(i, j).get_si()); });
}

km_status km_matrix_rank_mod_p(const km_matrix* m, uint32_t p, uint64_t* out) {
  if (!m || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = rank_mod_p(m->m.reduce_mod(p)); });
}

km_status km_matrix_rank_rational(const km_matrix* m, uint64_t* out) {
  if (!m || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = rank_rational(m->m); });
}

km_status km_matrix_left_kernel_mod_p(const km_matrix* m, uint32_t p, km_matrix** out_basis) {
  if (!m || !out_basis) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    ResidueMatrix basis = left_kernel_mod_p(m->m.reduce_mod(p));
    IntegerMatrix lift(basis.rows(), basis.cols());
    for (size_t i = 0; i < basis.rows(); ++i)
      for (size_t j = 0; j < basis.cols(); ++j) lift.set(i, j, basis.get(i, j));
    *out_basis = new km_matrix{std::move(lift)};
  });
}

km_status km_matrix_smith_normal_form(const km_matrix* m, char** out_json) {
  if (!m || !out_json) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out_json = dup_string(diagonal_spec_json(smith_normal_form(m->m)).dump()); });
}

km_status km_wilson_rank(uint32_t v, uint32_t t, uint32_t k, uint32_t p, uint64_t* out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = wilson_rank(v, t, k, p); });
}

km_status km_wilson_diagonal(uint32_t v, uint32_t t, uint32_t k, char** out_json) {
  if (!out_json) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out_json = dup_string(diagonal_spec_json(wilson_diagonal(v, t, k)).dump()); });
}

km_status km_kernel_class(uint32_t t, uint32_t k, uint32_t p, km_kernel_tag* out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] {
    switch (kernel_class(t, k, p).tag) {
      case KernelTag::Trivial: *out = KM_KERNEL_TRIVIAL; break;
      case KernelTag::AllOnes: *out = KM_KERNEL_ALL_ONES; break;
      case KernelTag::Other: *out = KM_KERNEL_OTHER; break;
    }
  });
}

struct km_graph {
  Graph g;
};

km_status km_graph_parse(const char* text, km_graph** out) {
  if (!text || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new km_graph{Graph::parse(text)}; });
}

km_status km_graph_serialize(const km_graph* g, char** out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(g->g.serialize()); });
}

void km_graph_free(km_graph* g) { delete g; }

uint32_t km_graph_vertices(const km_graph* g) { return g ? g->g.vertex_count() : 0; }
uint64_t km_graph_edges(const km_graph* g) { return g ? g->g.edge_count() : 0; }

km_status km_graph_induced_edge_count(const km_graph* g, uint32_t vertex_mask, uint64_t* out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = g->g.induced_edge_count(vertex_mask); });
}

km_status km_graph_boolean_sum(const km_graph* g, const km_graph* g2, km_graph** out) {
  if (!g || !g2 || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new km_graph{boolean_sum(g->g, g2->g)}; });
}

km_status km_graph_is_complete_bipartite(const km_graph* g, int* out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = g->g.is_complete_bipartite() ? 1 : 0; });
}

km_status km_graph_is_claw_free(const km_graph* g, int* out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = g->g.is_claw_free() ? 1 : 0; });
}

km_status km_graph_h3_count(const km_graph* g, uint64_t* out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = g->g.three_homogeneous_sets().size(); });
}

km_status km_graph_p4_count(const km_graph* g, uint64_t* out) {
  if (!g || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = g->g.p4_sets().size(); });
}

struct km_tournament {
  Tournament t;
};

km_status km_tournament_parse(const char* text, km_tournament** out) {
  if (!text || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new km_tournament{Tournament::parse(text)}; });
}

km_status km_tournament_serialize(const km_tournament* t, char** out) {
  if (!t || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(t->t.serialize()); });
}

void km_tournament_free(km_tournament* t) { delete t; }

uint32_t km_tournament_vertices(const km_tournament* t) { return t ? t->t.vertex_count() : 0; }

km_status km_tournament_dual(const km_tournament* t, km_tournament** out) {
  if (!t || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new km_tournament{t->t.dual()}; });
}

km_status km_tournament_c3_count(const km_tournament* t, uint64_t* out) {
  if (!t || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = t->t.c3_count(); });
}

km_status km_tournament_diamond_counts(const km_tournament* t, uint64_t* out_plus, uint64_t* out_minus) {
  if (!t || !out_plus || !out_minus) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto [plus, minus] = diamond_sets(t->t);
    *out_plus = plus.size();
    *out_minus = minus.size();
  });
}

km_status km_tournament_circular(uint32_t h, km_tournament** out) {
  if (!out) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out = new km_tournament{Tournament::circular(h)}; });
}

km_status km_tournament_is_interval(const km_tournament* t, uint32_t vertex_mask, int* out) {
  if (!t || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = t->t.is_interval(vertex_mask) ? 1 : 0; });
}

km_status km_tournament_hypomorphic_up_to(const km_tournament* t, const km_tournament* t2, uint32_t k,
                                          int up_to_duality, int* out) {
  if (!t || !t2 || !out) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = is_hypomorphic_up_to(t->t, t2->t, k, up_to_duality != 0) ? 1 : 0; });
}

km_status km_cmd_rank(uint32_t v, uint32_t t, uint32_t k, uint32_t p, char** out_json) {
  if (!out_json) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] { *out_json = dup_string(cmd_rank(v, t, k, p).to_json().dump()); });
}

km_status km_cmd_kernel(uint32_t v, uint32_t t, uint32_t k, uint32_t p, char** out_json, char** out_basis) {
  if (!out_json) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] {
    KernelResult r = cmd_kernel(v, t, k, p);
    *out_json = dup_string(r.report.to_json().dump());
    if (out_basis) {
      std::string basis;
      for (const std::string& row : r.basis_rows) {
        basis += row;
        basis += '\n';
      }
      *out_basis = dup_string(basis);
    }
  });
}

km_status km_cmd_verify(const char* id, const char* params_json, const char* options_json, char** out_json) {
  if (!id || !out_json) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    Json params = params_json && *params_json ? Json::parse(params_json) : Json::object();
    VerifyOptions opts = parse_options(options_json);
    *out_json = dup_string(cmd_verify(id, params, opts).to_json().dump());
  });
}

km_status km_catalogue(char** out_text) {
  if (!out_text) return fail(KM_ERR_ARGUMENT, "null output");
  return guarded([&] {
    std::string text;
    for (const std::string& id : verify_catalogue()) {
      text += id;
      text += '\n';
    }
    *out_text = dup_string(text);
  });
}

km_status km_cmd_suite(const char* profile, const char* options_json, char** out_json, char** out_sub_json) {
  if (!profile || !out_json) return fail(KM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    SuiteResult result = cmd_suite(profile, parse_options(options_json));
    *out_json = dup_string(result.aggregate.to_json().dump());
    if (out_sub_json) {
      Json subs = Json::array();
      for (const Report& r : result.sub) subs.push_back(r.to_json());
      *out_sub_json = dup_string(subs.dump());
    }
  });
}

}  // extern "C"
