#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "kellymod.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  km_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("scalar entry points") {
  CHECK(std::string(km_version()) == "0.1.0");

  char* dec = nullptr;
  REQUIRE(km_binomial(52, 26, &dec) == KM_OK);
  CHECK(take(dec) == "495918532948104");
  REQUIRE(km_binomial(6, -1, &dec) == KM_OK);
  CHECK(take(dec) == "0");

  uint32_t r = 99;
  REQUIRE(km_binomial_mod_p(7, 3, 2, &r) == KM_OK);
  CHECK(r == 1);
  CHECK(km_binomial_mod_p(7, 3, 4, &r) == KM_ERR_ARGUMENT);
  CHECK(std::strlen(km_last_error()) > 0);

  int b = -1;
  REQUIRE(km_p_divides_binomial(10, 4, 3, &b) == KM_OK);
  CHECK(b == 1);
  CHECK(km_p_divides_binomial(3, 10, 3, &b) == KM_ERR_ARGUMENT);

  uint32_t digits[8];
  size_t len = 8;
  REQUIRE(km_digits_base_p(10, 3, digits, &len) == KM_OK);
  REQUIRE(len == 3);
  CHECK(digits[0] == 1);
  CHECK(digits[1] == 0);
  CHECK(digits[2] == 1);

  uint64_t rank = 0;
  REQUIRE(km_subset_rank(0b1100, &rank) == KM_OK);
  CHECK(rank == 5);
  uint32_t mask = 0;
  REQUIRE(km_subset_unrank(5, 2, 4, &mask) == KM_OK);
  CHECK(mask == 0b1100);
  CHECK(km_subset_unrank(6, 2, 4, &mask) == KM_ERR_ARGUMENT);
}

TEST_CASE("matrix handles") {
  km_matrix* w = nullptr;
  REQUIRE(km_inclusion_matrix(6, 2, 3, &w) == KM_OK);
  CHECK(km_matrix_rows(w) == 15);
  CHECK(km_matrix_cols(w) == 20);
  uint64_t rank = 0;
  REQUIRE(km_matrix_rank_mod_p(w, 2, &rank) == KM_OK);
  CHECK(rank == 10);
  REQUIRE(km_matrix_rank_rational(w, &rank) == KM_OK);
  CHECK(rank == 15);
  uint64_t wr = 0;
  REQUIRE(km_wilson_rank(6, 2, 3, 2, &wr) == KM_OK);
  CHECK(wr == 10);
  CHECK(km_wilson_rank(6, 3, 4, 2, &wr) == KM_ERR_ARGUMENT);

  km_matrix* basis = nullptr;
  REQUIRE(km_matrix_left_kernel_mod_p(w, 2, &basis) == KM_OK);
  CHECK(km_matrix_rows(basis) == 5);
  km_matrix_free(basis);

  char* snf = nullptr;
  REQUIRE(km_matrix_smith_normal_form(w, &snf) == KM_OK);
  auto parsed = nlohmann::json::parse(take(snf));
  CHECK(parsed.at("rows") == 15);
  char* diag = nullptr;
  REQUIRE(km_wilson_diagonal(6, 2, 3, &diag) == KM_OK);
  auto wd = nlohmann::json::parse(take(diag));
  CHECK(wd.at("factors").size() == 3);
  km_matrix_free(w);

  km_matrix* kn = nullptr;
  REQUIRE(km_kneser_matrix(2, 5, &kn) == KM_OK);
  CHECK(km_matrix_rows(kn) == 10);
  int64_t entry = -1;
  REQUIRE(km_matrix_entry(kn, 0, 0, &entry) == KM_OK);
  CHECK(entry == 0);
  km_matrix_free(kn);

  km_kernel_tag tag;
  REQUIRE(km_kernel_class(2, 4, 2, &tag) == KM_OK);
  CHECK(tag == KM_KERNEL_ALL_ONES);

  CHECK(km_inclusion_matrix(32, 16, 16, &w) == KM_ERR_RESOURCE);
}

TEST_CASE("graph and tournament handles") {
  km_graph* g = nullptr;
  REQUIRE(km_graph_parse("v 3\ne 0 1\ne 1 2\ne 0 2\n", &g) == KM_OK);
  CHECK(km_graph_vertices(g) == 3);
  CHECK(km_graph_edges(g) == 3);
  uint64_t count = 0;
  REQUIRE(km_graph_induced_edge_count(g, 0b011, &count) == KM_OK);
  CHECK(count == 1);
  char* text = nullptr;
  REQUIRE(km_graph_serialize(g, &text) == KM_OK);
  CHECK(take(text) == "v 3\ne 0 1\ne 0 2\ne 1 2\n");
  int flag = 0;
  REQUIRE(km_graph_is_complete_bipartite(g, &flag) == KM_OK);
  CHECK(flag == 0);
  km_graph_free(g);

  km_graph* bad = nullptr;
  CHECK(km_graph_parse("v 3\ne 0 1\ne 0 1\n", &bad) == KM_ERR_PARSE);
  CHECK(std::string(km_last_error()).find("line 3") != std::string::npos);

  km_tournament* t = nullptr;
  REQUIRE(km_tournament_parse("v 3\na 0 1\na 1 2\na 2 0\n", &t) == KM_OK);
  uint64_t c3 = 0;
  REQUIRE(km_tournament_c3_count(t, &c3) == KM_OK);
  CHECK(c3 == 1);
  km_tournament* dual = nullptr;
  REQUIRE(km_tournament_dual(t, &dual) == KM_OK);
  int hyp = 0;
  REQUIRE(km_tournament_hypomorphic_up_to(t, dual, 3, 0, &hyp) == KM_OK);
  CHECK(hyp == 1);
  km_tournament_free(dual);
  km_tournament_free(t);

  km_tournament* t5 = nullptr;
  REQUIRE(km_tournament_circular(2, &t5) == KM_OK);
  CHECK(km_tournament_vertices(t5) == 5);
  uint64_t dplus = 9, dminus = 9;
  REQUIRE(km_tournament_diamond_counts(t5, &dplus, &dminus) == KM_OK);
  CHECK(dplus == 0);
  CHECK(dminus == 0);
  int iv = 0;
  REQUIRE(km_tournament_is_interval(t5, 0b00001, &iv) == KM_OK);
  CHECK(iv == 1);
  km_tournament_free(t5);

  CHECK(km_tournament_parse("v 3\na 0 1\na 1 2\n", &t) == KM_ERR_PARSE);
}

TEST_CASE("command reports through the C surface") {
  char* json = nullptr;
  REQUIRE(km_cmd_rank(6, 2, 3, 2, &json) == KM_OK);
  auto rank = nlohmann::json::parse(take(json));
  CHECK(rank.at("verdict") == "pass");
  CHECK(rank.at("counters").at("rank_wilson") == 10);
  CHECK(rank.at("counters").at("rank_rational") == 15);
  CHECK(rank.at("ms") == 0);

  CHECK(km_cmd_rank(6, 2, 6, 2, &json) == KM_ERR_ARGUMENT);

  char* basis = nullptr;
  REQUIRE(km_cmd_kernel(6, 2, 4, 2, &json, &basis) == KM_OK);
  auto kernel = nlohmann::json::parse(take(json));
  CHECK(kernel.at("counters").at("kernel_dim") == 1);
  CHECK(take(basis) == "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n");

  REQUIRE(km_cmd_verify("thm-main", R"({"v":5,"t":2,"k":3,"p":3})", nullptr, &json) == KM_OK);
  auto verify = nlohmann::json::parse(take(json));
  CHECK(verify.at("verdict") == "pass");
  CHECK(verify.at("route") == "exhaustive");

  REQUIRE(km_cmd_verify("claim-bipartite", R"({"v":7,"k":3})", nullptr, &json) == KM_OK);
  auto bip = nlohmann::json::parse(take(json));
  CHECK(bip.at("verdict") == "pass");
  CHECK(bip.at("counters").at("kernel_vectors") == 64);

  CHECK(km_cmd_verify("thm-unknown", "{}", nullptr, &json) == KM_ERR_UNKNOWN_ID);

  char* cat = nullptr;
  REQUIRE(km_catalogue(&cat) == KM_OK);
  std::string ids = take(cat);
  CHECK(ids.find("thm-tournament-5.1\n") != std::string::npos);
  CHECK(ids.find("lemma-pouzet\n") != std::string::npos);

  // identical options give byte-identical reports
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(km_cmd_verify("thm-graph-1.4", R"({"v":6,"k":4})", R"({"seed":7})", &a) == KM_OK);
  REQUIRE(km_cmd_verify("thm-graph-1.4", R"({"v":6,"k":4})", R"({"seed":7})", &b) == KM_OK);
  CHECK(take(a) == take(b));
}
