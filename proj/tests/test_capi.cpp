#include <doctest.h>

#include <biclique/biclique.h>

#include <cstring>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  bcp_string_free(s);
  return out;
}

bcp_graph* complete(size_t n) {
  bcp_graph* g = nullptr;
  REQUIRE(bcp_graph_complete(n, &g) == BCP_OK);
  return g;
}

}  // namespace

TEST_CASE("graph handles") {
  bcp_graph* g = nullptr;
  REQUIRE(bcp_graph_new(5, &g) == BCP_OK);
  for (uint32_t v = 0; v < 5; ++v) REQUIRE(bcp_graph_add_edge(g, v, (v + 1) % 5) == BCP_OK);
  CHECK(bcp_graph_order(g) == 5);
  CHECK(bcp_graph_edge_count(g) == 5);
  int adj = -1;
  CHECK(bcp_graph_adjacent(g, 0, 4, &adj) == BCP_OK);
  CHECK(adj == 1);
  CHECK(bcp_graph_add_edge(g, 2, 2) != BCP_OK);
  CHECK(bcp_graph_add_edge(g, 0, 9) != BCP_OK);

  char* text = nullptr;
  REQUIRE(bcp_graph_to_text(g, &text) == BCP_OK);
  bcp_graph* back = nullptr;
  REQUIRE(bcp_graph_parse(text, &back) == BCP_OK);
  bcp_string_free(text);
  CHECK(bcp_graph_edge_count(back) == 5);

  unsigned bc = 0;
  CHECK(bcp_exact_bc(back, -1, 14, &bc, nullptr) == BCP_OK);
  CHECK(bc == 3);
  size_t lb = 0;
  CHECK(bcp_lower_bound(back, &lb, nullptr) == BCP_OK);
  CHECK(lb == 3);
  bcp_graph_free(back);
  bcp_graph_free(g);
}

TEST_CASE("errors map to status codes") {
  bcp_graph* g = nullptr;
  CHECK(bcp_graph_parse("p 3 1\ne 0 7\n", &g) == BCP_MALFORMED_INPUT);
  CHECK(g == nullptr);
  CHECK(std::strlen(bcp_last_error()) > 0);
  CHECK(bcp_graph_parse(nullptr, &g) == BCP_INVALID_ARGUMENT);
  CHECK(std::string(bcp_status_name(BCP_BUDGET_EXCEEDED)) != std::string(bcp_status_name(BCP_NOT_FOUND)));

  bcp_graph* k = complete(6);
  unsigned bc = 0;
  CHECK(bcp_exact_bc(k, 3, 14, &bc, nullptr) == BCP_NOT_FOUND);
  bcp_graph_free(k);
  k = complete(20);
  CHECK(bcp_exact_bc(k, -1, 14, &bc, nullptr) == BCP_BUDGET_EXCEEDED);
  bcp_partition* p = nullptr;
  CHECK(bcp_decompose(k, "greedy", nullptr, 1, &p, nullptr) == BCP_INVALID_ARGUMENT);
  bcp_graph_free(k);

  char* js = nullptr;
  CHECK(bcp_fk_count({20, 2, 4, 2}, 1000, &js) == BCP_BUDGET_EXCEEDED);
  bcp_string_free(js);
  CHECK(bcp_asym_eval("nonsense", "{}", &js) == BCP_INVALID_ARGUMENT);
  CHECK(bcp_asym_eval("birthday", "{not json", &js) == BCP_MALFORMED_INPUT);
  int mode = 0;
  CHECK(bcp_effort_mode_parse("fast", &mode) == BCP_INVALID_ARGUMENT);
}

TEST_CASE("decompose and validate through the C API") {
  bcp_graph* k = complete(8);
  for (const char* method : {"stars", "three-stage", "fk"}) {
    bcp_partition* p = nullptr;
    char* report = nullptr;
    REQUIRE(bcp_decompose(k, method, nullptr, 3, &p, &report) == BCP_OK);
    const auto rep = json::parse(take(report));
    CHECK(rep["valid"] == true);
    CHECK(bcp_partition_size(p) == 7);
    CHECK(rep["size"] == 7);
    CHECK(bcp_partition_validate(k, p, nullptr) == BCP_OK);

    char* text = nullptr;
    REQUIRE(bcp_partition_to_json(p, &text) == BCP_OK);
    bcp_partition* back = nullptr;
    REQUIRE(bcp_partition_parse_json(text, &back) == BCP_OK);
    bcp_string_free(text);
    CHECK(bcp_partition_size(back) == 7);
    bcp_partition_free(back);
    bcp_partition_free(p);
  }

  bcp_partition* bad = nullptr;
  REQUIRE(bcp_partition_parse_json(R"({"n": 8, "blocks": [{"left": [0], "right": [1]}]})", &bad) == BCP_OK);
  char* detail = nullptr;
  CHECK(bcp_partition_validate(k, bad, &detail) == BCP_VALIDATION_FAILED);
  CHECK(!take(detail).empty());
  bcp_partition_free(bad);
  bcp_graph_free(k);
}

TEST_CASE("family operations through the C API") {
  const bcp_fk_params params{12, 3, 2, 3};
  bcp_graph* g = nullptr;
  bcp_witness* w = nullptr;
  REQUIRE(bcp_fk_plant(60, params, 4, 10000, &g, &w) == BCP_OK);
  int member = 0;
  CHECK(bcp_fk_is_member(g, w, &member) == BCP_OK);
  CHECK(member == 1);
  bcp_partition* p = nullptr;
  REQUIRE(bcp_fk_decompose(g, w, &p) == BCP_OK);
  CHECK(bcp_partition_size(p) <= 60 - 12 + 3);
  CHECK(bcp_partition_validate(g, p, nullptr) == BCP_OK);
  bcp_partition_free(p);

  char* text = nullptr;
  REQUIRE(bcp_witness_to_json(w, &text) == BCP_OK);
  bcp_witness* back = nullptr;
  REQUIRE(bcp_witness_parse_json(text, &back) == BCP_OK);
  bcp_string_free(text);
  CHECK(bcp_fk_is_member(g, back, &member) == BCP_OK);
  CHECK(member == 1);
  bcp_witness_free(back);
  bcp_witness_free(w);
  bcp_graph_free(g);

  char* js = nullptr;
  REQUIRE(bcp_fk_count({8, 2, 2, 2}, 100000000, &js) == BCP_OK);
  const auto counts = json::parse(take(js));
  CHECK(counts["count"] == 5040);
  CHECK(counts["by_placement"] == 5040);
  REQUIRE(bcp_fk_joint({8, 2, 2, 2}, 1, 100000000, &js) == BCP_OK);
  const auto joint = json::parse(take(js));
  CHECK(joint["layouts"].size() == 8);
}

TEST_CASE("twin-free construction through the C API") {
  bcp_graph* g = nullptr;
  bcp_labeling* l = nullptr;
  REQUIRE(bcp_twinfree_construct(4, &g, &l) == BCP_OK);
  CHECK(bcp_graph_order(g) == 31);
  int twin_free = 0;
  CHECK(bcp_graph_is_twin_free(g, &twin_free) == BCP_OK);
  CHECK(twin_free == 1);
  char* report = nullptr;
  CHECK(bcp_twinfree_verify(g, l, &report) == BCP_OK);
  CHECK(json::parse(take(report))["blocks"] == 4);
  bcp_labeling_free(l);
  bcp_graph_free(g);

  bcp_labeling* wrong = nullptr;
  REQUIRE(bcp_labeling_parse_json(R"({"r": 1, "labels": ["0", "1", "2"]})", &wrong) == BCP_OK);
  bcp_graph* empty = nullptr;
  REQUIRE(bcp_graph_new(3, &empty) == BCP_OK);
  CHECK(bcp_twinfree_verify(empty, wrong, nullptr) == BCP_VALIDATION_FAILED);
  bcp_graph_free(empty);
  bcp_labeling_free(wrong);

  char* js = nullptr;
  REQUIRE(bcp_twinfree_max_order(2, 1, &js) == BCP_OK);
  CHECK(json::parse(take(js))["order"] == 7);
}

TEST_CASE("asymptotics through the C API") {
  char* js = nullptr;
  REQUIRE(bcp_asym_eval("threshold", R"({"log2n": 1000000})", &js) == BCP_OK);
  const auto t = json::parse(take(js));
  CHECK(t["quantity"] == "threshold");
  CHECK(t["ratio"].get<double>() == doctest::Approx(2.036623).epsilon(1e-5));
  REQUIRE(bcp_asym_eval("birthday", R"({"a": 23, "b": 365})", &js) == BCP_OK);
  const auto b = json::parse(take(js));
  CHECK(b["value_if_representable"].get<double>() == doctest::Approx(std::exp(-23.0 * 22 / 730)));
  CHECK(b["inputs"]["a"] == 23);
}

TEST_CASE("experiment through the C API") {
  char* csv = nullptr;
  char* summary = nullptr;
  const char* config = R"({"n": [32], "trials": 2, "methods": ["stars"], "seed": 1})";
  REQUIRE(bcp_experiment_run(config, &csv, &summary) == BCP_OK);
  const std::string a = take(csv);
  CHECK(json::parse(take(summary)).contains("groups"));
  REQUIRE(bcp_experiment_run(config, &csv, nullptr) == BCP_OK);
  CHECK(take(csv) == a);
  CHECK(bcp_experiment_run(R"({"n": [], "trials": 1, "methods": ["stars"]})", &csv, nullptr) ==
        BCP_INVALID_ARGUMENT);
}
