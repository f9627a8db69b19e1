// Command-line front end. Talks to the library only through the C API.

#include <biclique/biclique.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

// Usage errors get their own code, apart from every bcp_status.
constexpr int kUsage = 64;

// A failed C call, carried to main as its status.
struct Failure {
  bcp_status status;
};

void check(bcp_status s) {
  if (s != BCP_OK) {
    std::cerr << "error: " << bcp_status_name(s) << ": " << bcp_last_error() << "\n";
    throw Failure{s};
  }
}

struct StringDeleter {
  void operator()(char* s) const { bcp_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(bcp_graph* g) const { bcp_graph_free(g); }
};
struct PartitionDeleter {
  void operator()(bcp_partition* p) const { bcp_partition_free(p); }
};
struct WitnessDeleter {
  void operator()(bcp_witness* w) const { bcp_witness_free(w); }
};
struct LabelingDeleter {
  void operator()(bcp_labeling* l) const { bcp_labeling_free(l); }
};
using Graph = std::unique_ptr<bcp_graph, GraphDeleter>;
using Partition = std::unique_ptr<bcp_partition, PartitionDeleter>;
using Witness = std::unique_ptr<bcp_witness, WitnessDeleter>;
using Labeling = std::unique_ptr<bcp_labeling, LabelingDeleter>;

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    throw Failure{BCP_MALFORMED_INPUT};
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{BCP_INTERNAL};
  }
}

// Value of a "# <key>: <json>" comment line in an edge-list document.
std::optional<std::string> embedded(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  const std::string prefix = "# " + key + ": ";
  for (std::string line; std::getline(lines, line);)
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return std::nullopt;
}

Graph parse_graph(const std::string& text) {
  bcp_graph* g = nullptr;
  check(bcp_graph_parse(text.c_str(), &g));
  return Graph(g);
}

std::string graph_text(const bcp_graph* g) {
  char* s = nullptr;
  check(bcp_graph_to_text(g, &s));
  return take(s);
}

std::string witness_json(const bcp_witness* w) {
  char* s = nullptr;
  check(bcp_witness_to_json(w, &s));
  return take(s);
}

std::string partition_json(const bcp_partition* p) {
  char* s = nullptr;
  check(bcp_partition_to_json(p, &s));
  return take(s);
}

struct EffortFlags {
  std::string mode = "auto";
  bcp_effort effort = bcp_effort_default();

  void attach(CLI::App* cmd) {
    cmd->add_option("--effort", mode, "Independent-set effort")->check(CLI::IsMember({"auto", "exact", "heuristic"}));
    cmd->add_option("--restarts", effort.restarts, "Greedy restarts in heuristic mode");
    cmd->add_option("--exact-cap", effort.exact_cap, "Largest vertex count for exact search");
    cmd->add_option("--node-budget", effort.node_budget, "Branch-and-bound node limit (0 = none)");
    cmd->add_option("--local-search", effort.local_search, "Swap local-search steps in heuristic mode");
  }

  bcp_effort resolve() {
    check(bcp_effort_mode_parse(mode.c_str(), &effort.mode));
    return effort;
  }
};

struct FamilyFlags {
  bcp_fk_params params{0, 0, 0, 0};

  void attach(CLI::App* cmd, bool required) {
    auto* k = cmd->add_option("--k", params.k, "Member size");
    auto* r = cmd->add_option("--r", params.r, "Group count");
    auto* s = cmd->add_option("--s", params.s, "Group size");
    auto* t = cmd->add_option("--tau", params.tau, "Degree and separation threshold");
    if (required) {
      k->required();
      r->required();
      s->required();
      t->required();
    }
  }
};

json output_json(const std::string& text) { return json::parse(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biclique partitions of graphs: decompositions, bounds, family counts, extremal graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bcp_version()));

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a G(n, p) edge list");
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t seed = 0;
  std::string output;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Partition a graph's edges into bicliques");
  std::string method, input, report_path;
  EffortFlags dec_effort;
  FamilyFlags dec_family;
  dec_family.params = bcp_decompose_options_default().fk;
  std::uint64_t fk_budget = bcp_decompose_options_default().fk_budget;
  dec->add_option("--method", method, "stars, three-stage or fk")
      ->required()
      ->check(CLI::IsMember({"stars", "three-stage", "fk"}));
  dec->add_option("-i,--input", input, "Edge-list file (default stdin)");
  dec->add_option("-o,--output", output, "Partition JSON file (default stdout)");
  dec->add_option("--report", report_path, "Write the run report JSON here");
  dec->add_option("--seed", seed, "Random seed")->required();
  dec->add_option("--budget", fk_budget, "Search node budget for the fk method");
  dec_effort.attach(dec);
  dec_family.attach(dec, false);

  // exact-bc
  auto* ebc = app.add_subcommand("exact-bc", "Exact biclique partition number of a small graph");
  int max_r = -1;
  std::size_t max_vertices = 14;
  bool show_labeling = false;
  ebc->add_option("-i,--input", input, "Edge-list file (default stdin)");
  ebc->add_option("--max-r", max_r, "Largest partition size to try (default n)");
  ebc->add_option("--max-vertices", max_vertices, "Refuse larger graphs");
  ebc->add_flag("--labeling", show_labeling, "Also print a witness labelling");

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "Inertia lower bound max(n+, n-)");
  bool lb_json = false;
  lb->add_option("-i,--input", input, "Edge-list file (default stdin)");
  lb->add_flag("--json", lb_json, "Print the full inertia as JSON");

  // alpha
  auto* alpha = app.add_subcommand("alpha", "Independent set (exact or heuristic)");
  EffortFlags alpha_effort;
  alpha->add_option("-i,--input", input, "Edge-list file (default stdin)");
  alpha->add_option("--seed", seed, "Random seed")->required();
  alpha_effort.attach(alpha);

  // fk
  auto* fk = app.add_subcommand("fk", "Patterned bipartite family");
  fk->require_subcommand(1);
  FamilyFlags family;
  unsigned attempts = 10000;
  std::uint64_t work_cap = 100000000;
  std::string witness_path;

  auto* fk_gen = fk->add_subcommand("gen", "Sample a member and emit its graph with the witness");
  family.attach(fk_gen, true);
  fk_gen->add_option("--seed", seed, "Random seed")->required();
  fk_gen->add_option("--attempts", attempts, "Rejection-sampling attempts");
  fk_gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* fk_check = fk->add_subcommand("check", "Check that a witness is an induced member");
  fk_check->add_option("-i,--input", input, "Edge-list file (default stdin)");
  fk_check->add_option("--witness", witness_path, "Witness JSON file (default: embedded '# witness:' line)");

  auto* fk_count = fk->add_subcommand("count", "Count labelled members by two enumerations");
  family.attach(fk_count, true);
  fk_count->add_option("--work-cap", work_cap, "Enumeration work cap");

  auto* fk_search = fk->add_subcommand("search", "Search a graph for an induced member");
  std::uint64_t search_budget = 2000000;
  family.attach(fk_search, true);
  fk_search->add_option("-i,--input", input, "Edge-list file (default stdin)");
  fk_search->add_option("--seed", seed, "Random seed")->required();
  fk_search->add_option("--budget", search_budget, "Search node budget");
  fk_search->add_option("-o,--output", output, "Witness JSON file (default stdout)");

  auto* fk_plant = fk->add_subcommand("plant", "Plant a member in G(n, 1/2)");
  std::size_t plant_n = 0;
  family.attach(fk_plant, true);
  fk_plant->add_option("--n", plant_n, "Host vertex count")->required();
  fk_plant->add_option("--seed", seed, "Random seed")->required();
  fk_plant->add_option("--attempts", attempts, "Rejection-sampling attempts");
  fk_plant->add_option("-o,--output", output, "Output file (default stdout)");

  auto* fk_joint = fk->add_subcommand("joint", "Joint extension counts against their bound");
  unsigned joint_j = 1;
  family.attach(fk_joint, true);
  fk_joint->add_option("--j", joint_j, "Vertices outside the overlap")->required();
  fk_joint->add_option("--work-cap", work_cap, "Enumeration work cap");

  // twinfree
  auto* tf = app.add_subcommand("twinfree", "Twin-free extremal graphs");
  tf->require_subcommand(1);
  unsigned tf_r = 0;
  std::string labeling_path;
  auto* tf_construct = tf->add_subcommand("construct", "Emit the extremal graph with its labelling");
  tf_construct->add_option("--r", tf_r, "Dimension")->required();
  tf_construct->add_option("-o,--output", output, "Output file (default stdout)");
  auto* tf_verify = tf->add_subcommand("verify", "Verify a graph and labelling");
  tf_verify->add_option("-i,--input", input, "Edge-list file (default stdin)");
  tf_verify->add_option("--labeling", labeling_path, "Labelling JSON file (default: embedded '# labeling:' line)");
  auto* tf_max = tf->add_subcommand("maxorder", "Exhaustive maximum twin-free order");
  bool no_lemma = false;
  tf_max->add_option("--r", tf_r, "Dimension (at most 3)")->required();
  tf_max->add_flag("--no-lemma", no_lemma, "Do not prune by support classes");

  // asym
  auto* asym = app.add_subcommand("asym", "Evaluate a closed-form quantity in log domain");
  std::string quantity;
  std::map<std::string, double> asym_inputs;
  asym->add_option("quantity", quantity, "birthday, alpha, log-h, threshold, case1, claim32, count-formula")
      ->required();
  for (const char* name : {"a", "b", "n", "p", "k", "r", "s", "tau", "i", "j", "log2n"}) {
    asym->add_option_function<double>(std::string("--") + name, [&asym_inputs, name](double v) { asym_inputs[name] = v; },
                                      std::string("Input ") + name);
  }

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a batch experiment");
  std::string config_path, csv_path, summary_path;
  exp->add_option("--config", config_path, "Experiment config JSON")->required();
  exp->add_option("--seed", seed, "Root seed (overrides the config)")->required();
  exp->add_option("--csv", csv_path, "CSV output file (default stdout)");
  exp->add_option("--summary", summary_path, "Summary JSON file (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      bcp_graph* g = nullptr;
      check(bcp_graph_gnp(gen_n, gen_p, seed, &g));
      Graph owned(g);
      write_text(output, graph_text(g));
    } else if (*dec) {
      Graph g = parse_graph(read_text(input));
      bcp_decompose_options opts = bcp_decompose_options_default();
      opts.effort = dec_effort.resolve();
      opts.fk = dec_family.params;
      opts.fk_budget = fk_budget;
      bcp_partition* p = nullptr;
      char* report = nullptr;
      check(bcp_decompose(g.get(), method.c_str(), &opts, seed, &p, &report));
      Partition owned(p);
      const std::string rep = take(report);
      char* detail = nullptr;
      check(bcp_partition_validate(g.get(), p, &detail));
      const std::string status = take(detail);
      write_text(output, partition_json(p) + "\n");
      if (!report_path.empty()) write_text(report_path, rep + "\n");
      std::cerr << "size " << bcp_partition_size(p) << " validation " << status << "\n";
    } else if (*ebc) {
      Graph g = parse_graph(read_text(input));
      unsigned bc = 0;
      char* labeling = nullptr;
      check(bcp_exact_bc(g.get(), max_r, max_vertices, &bc, show_labeling ? &labeling : nullptr));
      std::cout << bc << "\n";
      if (show_labeling) std::cout << take(labeling) << "\n";
    } else if (*lb) {
      Graph g = parse_graph(read_text(input));
      std::size_t bound = 0;
      char* js = nullptr;
      check(bcp_lower_bound(g.get(), &bound, lb_json ? &js : nullptr));
      if (lb_json) std::cout << take(js) << "\n";
      else std::cout << bound << "\n";
    } else if (*alpha) {
      Graph g = parse_graph(read_text(input));
      const bcp_effort e = alpha_effort.resolve();
      char* js = nullptr;
      check(bcp_alpha(g.get(), &e, seed, &js));
      std::cout << take(js) << "\n";
    } else if (*fk_gen) {
      bcp_witness* w = nullptr;
      check(bcp_fk_sample(family.params, seed, attempts, &w));
      Witness owned(w);
      bcp_graph* g = nullptr;
      check(bcp_fk_member_graph(w, family.params.k, &g));
      Graph graph(g);
      write_text(output, "# witness: " + witness_json(w) + "\n" + graph_text(g));
    } else if (*fk_check) {
      const std::string text = read_text(input);
      Graph g = parse_graph(text);
      std::string wtext;
      if (!witness_path.empty()) {
        wtext = read_text(witness_path);
      } else if (auto e = embedded(text, "witness")) {
        wtext = *e;
      } else {
        std::cerr << "error: no witness given and no '# witness:' line in the input\n";
        return kUsage;
      }
      bcp_witness* w = nullptr;
      check(bcp_witness_parse_json(wtext.c_str(), &w));
      Witness owned(w);
      int member = 0;
      check(bcp_fk_is_member(g.get(), w, &member));
      std::cout << (member ? "member" : "not a member") << "\n";
      if (!member) return BCP_VALIDATION_FAILED;
    } else if (*fk_count) {
      char* js = nullptr;
      const bcp_status s = bcp_fk_count(family.params, work_cap, &js);
      if (js) std::cout << take(js) << "\n";
      check(s);
    } else if (*fk_search) {
      Graph g = parse_graph(read_text(input));
      bcp_witness* w = nullptr;
      check(bcp_fk_search(g.get(), family.params, seed, search_budget, &w));
      Witness owned(w);
      write_text(output, witness_json(w) + "\n");
    } else if (*fk_plant) {
      bcp_graph* g = nullptr;
      bcp_witness* w = nullptr;
      check(bcp_fk_plant(plant_n, family.params, seed, attempts, &g, &w));
      Graph graph(g);
      Witness owned(w);
      write_text(output, "# witness: " + witness_json(w) + "\n" + graph_text(g));
    } else if (*fk_joint) {
      char* js = nullptr;
      const bcp_status s = bcp_fk_joint(family.params, joint_j, work_cap, &js);
      if (js) std::cout << take(js) << "\n";
      check(s);
    } else if (*tf_construct) {
      bcp_graph* g = nullptr;
      bcp_labeling* l = nullptr;
      check(bcp_twinfree_construct(tf_r, &g, &l));
      Graph graph(g);
      Labeling owned(l);
      char* js = nullptr;
      check(bcp_labeling_to_json(l, &js));
      write_text(output, "# labeling: " + take(js) + "\n" + graph_text(g));
    } else if (*tf_verify) {
      const std::string text = read_text(input);
      Graph g = parse_graph(text);
      std::string ltext;
      if (!labeling_path.empty()) {
        ltext = read_text(labeling_path);
      } else if (auto e = embedded(text, "labeling")) {
        ltext = *e;
      } else {
        std::cerr << "error: no labelling given and no '# labeling:' line in the input\n";
        return kUsage;
      }
      bcp_labeling* l = nullptr;
      check(bcp_labeling_parse_json(ltext.c_str(), &l));
      Labeling owned(l);
      char* js = nullptr;
      const bcp_status s = bcp_twinfree_verify(g.get(), l, &js);
      if (js) std::cout << take(js) << "\n";
      check(s);
    } else if (*tf_max) {
      char* js = nullptr;
      const bcp_status s = bcp_twinfree_max_order(tf_r, no_lemma ? 0 : 1, &js);
      if (js) std::cout << take(js) << "\n";
      check(s);
    } else if (*asym) {
      json inputs = json::object();
      for (const auto& [k, v] : asym_inputs) inputs[k] = v;
      char* js = nullptr;
      check(bcp_asym_eval(quantity.c_str(), inputs.dump().c_str(), &js));
      std::cout << take(js) << "\n";
    } else if (*exp) {
      json config;
      try {
        config = json::parse(read_text(config_path));
      } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return BCP_MALFORMED_INPUT;
      }
      if (!config.is_object()) {
        std::cerr << "error: malformed input: config must be a JSON object\n";
        return BCP_MALFORMED_INPUT;
      }
      config["seed"] = seed;
      char* csv = nullptr;
      char* summary = nullptr;
      check(bcp_experiment_run(config.dump().c_str(), &csv, &summary));
      write_text(csv_path, take(csv));
      const std::string sum = output_json(take(summary)).dump(2) + "\n";
      if (summary_path.empty()) std::cerr << sum;
      else write_text(summary_path, sum);
    }
  } catch (const Failure& f) {
    return f.status;
  }
  return 0;
}
