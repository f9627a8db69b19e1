#include <biclique/biclique.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "asymptotics.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "fk_family.hpp"
#include "graph.hpp"
#include "independent_set.hpp"
#include "labeling.hpp"
#include "partition.hpp"
#include "serialize.hpp"
#include "twinfree.hpp"

struct bcp_graph {
  bcp::Graph g;
};
struct bcp_partition {
  bcp::PartitionDocument doc;
};
struct bcp_witness {
  bcp::fk::PatternedBipartite w;
};
struct bcp_labeling {
  bcp::VectorLabeling l;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

bcp_status fail(bcp_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
bcp_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const bcp::ParseError& e) {
    return fail(BCP_MALFORMED_INPUT, e.what());
  } catch (const bcp::BudgetExceeded& e) {
    return fail(BCP_BUDGET_EXCEEDED, e.what());
  } catch (const bcp::PreconditionError& e) {
    return fail(BCP_PRECONDITION, e.what());
  } catch (const bcp::InvalidArgument& e) {
    return fail(BCP_INVALID_ARGUMENT, e.what());
  } catch (const bcp::ValidationFailure& e) {
    return fail(BCP_VALIDATION_FAILED, e.what());
  } catch (const json::exception& e) {
    return fail(BCP_MALFORMED_INPUT, std::string("malformed JSON document: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(BCP_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BCP_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

void put(char** out, const json& j) {
  if (out) *out = dup_string(j.dump());
}

void require(const void* p, const char* what) {
  if (!p) throw bcp::InvalidArgument(std::string(what) + " is null");
}

bcp::Effort to_effort(const bcp_effort& e) {
  bcp::Effort out;
  switch (e.mode) {
    case 0: out.mode = bcp::Effort::Mode::automatic; break;
    case 1: out.mode = bcp::Effort::Mode::exact; break;
    case 2: out.mode = bcp::Effort::Mode::heuristic; break;
    default: throw bcp::InvalidArgument("unknown effort mode " + std::to_string(e.mode));
  }
  out.restarts = e.restarts;
  out.exact_cap = e.exact_cap;
  out.node_budget = e.node_budget;
  out.local_search = e.local_search;
  return out;
}

bcp::fk::FamilyParams to_params(const bcp_fk_params& p) {
  bcp::fk::FamilyParams out{p.k, p.r, p.s, p.tau};
  out.validate();
  return out;
}

json three_stage_json(const bcp::ThreeStageReport& r) {
  return {{"n", r.n},
          {"independent_size", r.independent_size},
          {"block_count", r.block_count},
          {"pairs_found", r.pairs_found},
          {"pairs_selected", r.pairs_selected},
          {"pairs_lost_to_adjacency", r.pairs_lost_to_adjacency},
          {"partition_size", r.partition_size},
          {"savings", r.savings}};
}

json log_real_json(const std::string& quantity, const json& inputs, const bcp::asym::LogReal& x) {
  json out{{"quantity", quantity}, {"inputs", inputs}, {"log2_value", x.log2()}};
  if (x.negative()) out["log2_value"] = nullptr;
  if (auto v = x.value()) out["value_if_representable"] = *v;
  else out["value_if_representable"] = nullptr;
  return out;
}

json plain_json(const std::string& quantity, const json& inputs, double value) {
  return log_real_json(quantity, inputs, bcp::asym::LogReal::from_double(value));
}

double number(const json& inputs, const char* key) {
  if (!inputs.contains(key) || !inputs[key].is_number())
    throw bcp::InvalidArgument(std::string("missing numeric input '") + key + "'");
  return inputs[key].get<double>();
}

unsigned whole(const json& inputs, const char* key) {
  const double x = number(inputs, key);
  if (x < 0 || x != std::floor(x) || x > 4294967295.0)
    throw bcp::InvalidArgument(std::string("input '") + key + "' must be a non-negative integer");
  return static_cast<unsigned>(x);
}

bcp::fk::FamilyParams params_from(const json& inputs) {
  return to_params({whole(inputs, "k"), whole(inputs, "r"), whole(inputs, "s"),
                    inputs.contains("tau") ? whole(inputs, "tau") : 0});
}

}  // namespace

extern "C" {

const char* bcp_version(void) { return "1.0.0"; }

const char* bcp_last_error(void) { return last_error.c_str(); }

const char* bcp_status_name(bcp_status status) {
  switch (status) {
    case BCP_OK: return "ok";
    case BCP_VALIDATION_FAILED: return "validation failed";
    case BCP_INVALID_ARGUMENT: return "invalid argument";
    case BCP_MALFORMED_INPUT: return "malformed input";
    case BCP_BUDGET_EXCEEDED: return "budget exceeded";
    case BCP_NOT_FOUND: return "not found";
    case BCP_PRECONDITION: return "precondition failed";
    case BCP_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bcp_string_free(char* s) { std::free(s); }

bcp_status bcp_graph_new(size_t n, bcp_graph** out) {
  return guarded([&] {
    require(out, "output");
    *out = new bcp_graph{bcp::Graph(n)};
    return BCP_OK;
  });
}

bcp_status bcp_graph_complete(size_t n, bcp_graph** out) {
  return guarded([&] {
    require(out, "output");
    *out = new bcp_graph{bcp::Graph::complete(n)};
    return BCP_OK;
  });
}

bcp_status bcp_graph_gnp(size_t n, double p, uint64_t seed, bcp_graph** out) {
  return guarded([&] {
    require(out, "output");
    *out = new bcp_graph{bcp::gnp(n, p, bcp::Seed(seed))};
    return BCP_OK;
  });
}

bcp_status bcp_graph_parse(const char* text, bcp_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new bcp_graph{bcp::read_graph(text)};
    return BCP_OK;
  });
}

bcp_status bcp_graph_to_text(const bcp_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    put(out, bcp::write_graph(g->g));
    return BCP_OK;
  });
}

bcp_status bcp_graph_add_edge(bcp_graph* g, uint32_t u, uint32_t v) {
  return guarded([&] {
    require(g, "graph");
    g->g.add_edge(u, v);
    return BCP_OK;
  });
}

bcp_status bcp_graph_adjacent(const bcp_graph* g, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    if (u >= g->g.size() || v >= g->g.size()) throw bcp::InvalidArgument("vertex out of range");
    *out = g->g.adjacent(u, v) ? 1 : 0;
    return BCP_OK;
  });
}

size_t bcp_graph_order(const bcp_graph* g) { return g ? g->g.size() : 0; }

size_t bcp_graph_edge_count(const bcp_graph* g) { return g ? g->g.edge_count() : 0; }

bcp_status bcp_graph_is_twin_free(const bcp_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = bcp::is_twin_free(g->g) ? 1 : 0;
    return BCP_OK;
  });
}

void bcp_graph_free(bcp_graph* g) { delete g; }

bcp_effort bcp_effort_default(void) {
  const bcp::Effort e;
  return {0, e.restarts, e.exact_cap, e.node_budget, e.local_search};
}

bcp_status bcp_effort_mode_parse(const char* name, int* mode) {
  return guarded([&] {
    require(name, "name");
    require(mode, "output");
    const std::string s = name;
    if (s == "auto") *mode = 0;
    else if (s == "exact") *mode = 1;
    else if (s == "heuristic") *mode = 2;
    else throw bcp::InvalidArgument("unknown effort '" + s + "' (expected auto, exact or heuristic)");
    return BCP_OK;
  });
}

bcp_status bcp_alpha(const bcp_graph* g, const bcp_effort* effort, uint64_t seed, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    const bcp::Effort e = effort ? to_effort(*effort) : bcp::Effort{};
    const auto s = bcp::independent_set(g->g, bcp::VertexSet::full(g->g.size()), e, bcp::Seed(seed));
    if (!g->g.is_independent(s)) return fail(BCP_INTERNAL, "independent set search returned a dependent set");
    put(json_out, json{{"alpha", s.count()}, {"set", s.members()}});
    return BCP_OK;
  });
}

bcp_status bcp_partition_parse_json(const char* text, bcp_partition** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new bcp_partition{bcp::partition_from_json(std::string_view(text))};
    return BCP_OK;
  });
}

bcp_status bcp_partition_to_json(const bcp_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "output");
    put(out, bcp::partition_to_json(p->doc));
    return BCP_OK;
  });
}

size_t bcp_partition_size(const bcp_partition* p) { return p ? p->doc.partition.size() : 0; }

void bcp_partition_free(bcp_partition* p) { delete p; }

bcp_status bcp_partition_validate(const bcp_graph* g, const bcp_partition* p, char** detail) {
  return guarded([&] {
    require(g, "graph");
    require(p, "partition");
    if (auto v = bcp::validate(g->g, p->doc.partition)) {
      put(detail, v->describe());
      return fail(BCP_VALIDATION_FAILED, v->describe());
    }
    put(detail, std::string("ok"));
    return BCP_OK;
  });
}

bcp_decompose_options bcp_decompose_options_default(void) {
  const bcp::DecomposeOptions d;
  return {bcp_effort_default(), {d.fk_params.k, d.fk_params.r, d.fk_params.s, d.fk_params.tau}, d.fk_budget.nodes};
}

bcp_status bcp_decompose(const bcp_graph* g, const char* method, const bcp_decompose_options* options, uint64_t seed,
                         bcp_partition** out, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(method, "method");
    require(out, "output");
    const auto m = bcp::parse_method(method);
    if (!m) throw bcp::InvalidArgument(std::string("unknown method '") + method + "'");
    const bcp_decompose_options o = options ? *options : bcp_decompose_options_default();
    bcp::DecomposeOptions opts;
    opts.alpha_effort = to_effort(o.effort);
    opts.fk_params = to_params(o.fk);
    opts.fk_budget.nodes = o.fk_budget;
    auto res = bcp::decompose(g->g, *m, opts, bcp::Seed(seed));
    if (auto v = bcp::validate(g->g, res.partition))
      return fail(BCP_VALIDATION_FAILED, "decomposition failed validation: " + v->describe());

    json rep{{"method", bcp::method_name(res.method)},
             {"n", g->g.size()},
             {"alpha_hat", res.alpha_hat},
             {"size", res.partition.size()},
             {"star_bound", g->g.size() - res.alpha_hat},
             {"fell_back", res.fell_back},
             {"valid", true}};
    if (res.three_stage) rep["three_stage"] = three_stage_json(*res.three_stage);
    if (res.fk_witness) rep["fk_witness"] = bcp::witness_to_json(*res.fk_witness);
    put(report_json, rep);
    *out = new bcp_partition{{std::move(res.partition), bcp::method_name(*m), seed}};
    return BCP_OK;
  });
}

bcp_status bcp_exact_bc(const bcp_graph* g, int max_r, size_t max_vertices, unsigned* bc, char** labeling_json) {
  return guarded([&] {
    require(g, "graph");
    require(bc, "output");
    bcp::ExactBcOptions opts;
    if (max_r >= 0) opts.max_r = static_cast<unsigned>(max_r);
    opts.max_vertices = max_vertices;
    const auto res = bcp::exact_bc(g->g, opts);
    if (!res) return fail(BCP_NOT_FOUND, "no biclique partition within the requested size");
    *bc = res->bc;
    put(labeling_json, bcp::labeling_to_json(res->witness));
    return BCP_OK;
  });
}

bcp_status bcp_lower_bound(const bcp_graph* g, size_t* bound, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    const auto in = bcp::adjacency_inertia(g->g);
    const std::size_t b = std::max(in.positive, in.negative);
    if (bound) *bound = b;
    put(json_out, json{{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}, {"lower_bound", b}});
    return BCP_OK;
  });
}

bcp_status bcp_fk_sample(bcp_fk_params params, uint64_t seed, unsigned attempts, bcp_witness** out) {
  return guarded([&] {
    require(out, "output");
    auto w = bcp::fk::sample_member(to_params(params), bcp::Seed(seed), attempts);
    if (!w) return fail(BCP_NOT_FOUND, "no member found within " + std::to_string(attempts) + " attempts");
    *out = new bcp_witness{std::move(*w)};
    return BCP_OK;
  });
}

bcp_status bcp_fk_plant(size_t n, bcp_fk_params params, uint64_t seed, unsigned attempts, bcp_graph** graph,
                        bcp_witness** witness) {
  return guarded([&] {
    require(graph, "graph output");
    require(witness, "witness output");
    auto inst = bcp::fk::plant_member(n, to_params(params), bcp::Seed(seed), attempts);
    if (!inst) return fail(BCP_NOT_FOUND, "no member found within " + std::to_string(attempts) + " attempts");
    *graph = new bcp_graph{std::move(inst->graph)};
    *witness = new bcp_witness{std::move(inst->witness)};
    return BCP_OK;
  });
}

bcp_status bcp_fk_search(const bcp_graph* g, bcp_fk_params params, uint64_t seed, uint64_t budget, bcp_witness** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto w = bcp::fk::find_induced_member(g->g, to_params(params), bcp::Seed(seed), {budget});
    if (!w) return fail(BCP_NOT_FOUND, "no induced member found within the search budget");
    if (!bcp::fk::is_member(g->g, *w)) return fail(BCP_INTERNAL, "search returned a non-member");
    *out = new bcp_witness{std::move(*w)};
    return BCP_OK;
  });
}

bcp_status bcp_fk_member_graph(const bcp_witness* w, size_t n, bcp_graph** out) {
  return guarded([&] {
    require(w, "witness");
    require(out, "output");
    *out = new bcp_graph{bcp::fk::member_graph(w->w, n)};
    return BCP_OK;
  });
}

bcp_status bcp_fk_is_member(const bcp_graph* g, const bcp_witness* w, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(w, "witness");
    require(out, "output");
    *out = bcp::fk::is_member(g->g, w->w) ? 1 : 0;
    return BCP_OK;
  });
}

bcp_status bcp_fk_canonical(const bcp_witness* w, size_t n, bcp_partition** out) {
  return guarded([&] {
    require(w, "witness");
    require(out, "output");
    *out = new bcp_partition{{bcp::fk::canonical_decomposition(w->w, n), "fk-canonical", 0}};
    return BCP_OK;
  });
}

bcp_status bcp_fk_decompose(const bcp_graph* g, const bcp_witness* w, bcp_partition** out) {
  return guarded([&] {
    require(g, "graph");
    require(w, "witness");
    require(out, "output");
    auto p = bcp::fk::fk_decomposition(g->g, w->w);
    if (auto v = bcp::validate(g->g, p)) return fail(BCP_VALIDATION_FAILED, v->describe());
    *out = new bcp_partition{{std::move(p), "fk", 0}};
    return BCP_OK;
  });
}

bcp_status bcp_fk_count(bcp_fk_params params, uint64_t work_cap, char** json_out) {
  return guarded([&] {
    const auto p = to_params(params);
    const auto count = bcp::fk::count_members(p, work_cap);
    const auto placed = bcp::fk::count_by_placement(p, work_cap);
    put(json_out, json{{"k", p.k},
                       {"r", p.r},
                       {"s", p.s},
                       {"tau", p.tau},
                       {"count", count},
                       {"by_placement", placed},
                       {"formula_upper_ln", bcp::fk::count_formula_upper(p)}});
    if (count > placed)
      return fail(BCP_VALIDATION_FAILED, "distinct count " + std::to_string(count) + " exceeds placement count " +
                                             std::to_string(placed));
    return BCP_OK;
  });
}

bcp_status bcp_fk_joint(bcp_fk_params params, unsigned j, uint64_t work_cap, char** json_out) {
  return guarded([&] {
    const auto p = to_params(params);
    const auto bound = bcp::asym::claim32_bound(p, j);
    json layouts = json::array();
    bool within = true;
    for (const auto& x : bcp::fk::all_joint_extension_counts(p, j, work_cap)) {
      const bool ok = static_cast<long double>(x.count) <= x.bound &&
                      bcp::asym::LogReal::from_double(static_cast<double>(x.count)) <= bound;
      within = within && ok;
      layouts.push_back({{"common", x.common},
                         {"count", x.count},
                         {"bound", static_cast<double>(x.bound)},
                         {"within_bound", ok}});
    }
    put(json_out, json{{"j", j}, {"bound_ln", bound.ln()}, {"layouts", layouts}});
    if (!within) return fail(BCP_VALIDATION_FAILED, "a joint extension count exceeds its bound");
    return BCP_OK;
  });
}

bcp_status bcp_witness_parse_json(const char* text, bcp_witness** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new bcp_witness{bcp::witness_from_json(std::string_view(text))};
    return BCP_OK;
  });
}

bcp_status bcp_witness_to_json(const bcp_witness* w, char** out) {
  return guarded([&] {
    require(w, "witness");
    require(out, "output");
    put(out, bcp::witness_to_json(w->w));
    return BCP_OK;
  });
}

void bcp_witness_free(bcp_witness* w) { delete w; }

bcp_status bcp_twinfree_construct(unsigned r, bcp_graph** graph, bcp_labeling** labeling) {
  return guarded([&] {
    require(graph, "graph output");
    require(labeling, "labeling output");
    auto e = bcp::twinfree::extremal_graph(r);
    *graph = new bcp_graph{std::move(e.graph)};
    *labeling = new bcp_labeling{std::move(e.labeling)};
    return BCP_OK;
  });
}

bcp_status bcp_twinfree_verify(const bcp_graph* g, const bcp_labeling* l, char** report_json) {
  return guarded([&] {
    require(g, "graph");
    require(l, "labeling");
    const auto rep = bcp::twinfree::verify(g->g, l->l);
    put(report_json, json{{"vertex_count_ok", rep.vertex_count_ok},
                          {"twin_free", rep.twin_free},
                          {"partition_ok", rep.partition_ok},
                          {"blocks", rep.blocks},
                          {"support_classes_ok", rep.support_classes_ok},
                          {"detail", rep.detail},
                          {"ok", rep.ok()}});
    if (!rep.ok()) return fail(BCP_VALIDATION_FAILED, rep.detail.empty() ? "verification failed" : rep.detail);
    return BCP_OK;
  });
}

bcp_status bcp_twinfree_max_order(unsigned r, int support_lemma, char** json_out) {
  return guarded([&] {
    const auto res = bcp::twinfree::max_twinfree_order(r, support_lemma != 0);
    json witness = json::array();
    for (const auto& l : res.witness) witness.push_back(bcp::label_to_string(l, r));
    const std::uint64_t expected = (std::uint64_t{1} << (r + 1)) - 1;
    put(json_out, json{{"r", r}, {"order", res.order}, {"expected", expected}, {"nodes", res.nodes}, {"witness", witness}});
    if (res.order != expected)
      return fail(BCP_VALIDATION_FAILED, "maximum order " + std::to_string(res.order) + " differs from " +
                                             std::to_string(expected));
    return BCP_OK;
  });
}

bcp_status bcp_labeling_parse_json(const char* text, bcp_labeling** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new bcp_labeling{bcp::labeling_from_json(std::string_view(text))};
    return BCP_OK;
  });
}

bcp_status bcp_labeling_to_json(const bcp_labeling* l, char** out) {
  return guarded([&] {
    require(l, "labeling");
    require(out, "output");
    put(out, bcp::labeling_to_json(l->l));
    return BCP_OK;
  });
}

void bcp_labeling_free(bcp_labeling* l) { delete l; }

bcp_status bcp_asym_eval(const char* quantity, const char* inputs_json, char** json_out) {
  return guarded([&] {
    require(quantity, "quantity");
    require(json_out, "output");
    const json in = inputs_json ? bcp::parse_json(inputs_json) : json::object();
    if (!in.is_object()) throw bcp::InvalidArgument("inputs must be a JSON object");
    const std::string q = quantity;
    namespace A = bcp::asym;
    json out;
    if (q == "birthday") {
      out = log_real_json(q, in, A::birthday_upper_log(number(in, "a"), number(in, "b")));
    } else if (q == "alpha") {
      out = plain_json(q, in, A::alpha_prediction(number(in, "n"), number(in, "p")));
    } else if (q == "log-h") {
      const auto p = params_from(in);
      out = log_real_json(q, in, A::log_h(number(in, "n"), p));
    } else if (q == "threshold") {
      const auto t = A::threshold_k(number(in, "log2n"));
      out = plain_json(q, in, t.k);
      out["k"] = t.k;
      out["r"] = t.r;
      out["ratio"] = t.ratio;
      out["savings_coefficient"] = t.savings_coefficient;
    } else if (q == "case1") {
      const double n = in.contains("log2n") ? std::exp2(number(in, "log2n")) : number(in, "n");
      out = log_real_json(q, in, A::case1_ratio(n, whole(in, "k"), whole(in, "i")));
    } else if (q == "claim32") {
      out = log_real_json(q, in, A::claim32_bound(params_from(in), whole(in, "j")));
    } else if (q == "count-formula") {
      out = log_real_json(q, in, A::LogReal::from_log(bcp::fk::count_formula_upper(params_from(in))));
    } else {
      throw bcp::InvalidArgument("unknown quantity '" + q +
                                 "' (expected birthday, alpha, log-h, threshold, case1, claim32, count-formula)");
    }
    put(json_out, out);
    return BCP_OK;
  });
}

bcp_status bcp_experiment_run(const char* config_json, char** csv, char** summary_json) {
  return guarded([&] {
    require(config_json, "config");
    const auto config = bcp::experiment_config_from_json(bcp::parse_json(config_json));
    const auto res = bcp::run_experiment(config);
    put(csv, res.csv);
    put(summary_json, res.summary);
    return BCP_OK;
  });
}

}  // extern "C"
