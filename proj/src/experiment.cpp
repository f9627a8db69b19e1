#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace bcp {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (ns.empty()) throw InvalidArgument("experiment needs at least one n");
  if (methods.empty()) throw InvalidArgument("experiment needs at least one method");
  if (trials < 1) throw InvalidArgument("experiment needs at least one trial");
  if (!(p >= 0 && p <= 1)) throw InvalidArgument("p must lie in [0,1]");
  for (auto n : ns)
    if (n > max_n) throw InvalidArgument("n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(max_n));
}

namespace {

Effort effort_from_json(const json& j) {
  Effort e;
  const std::string mode = j.value("mode", "auto");
  if (mode == "auto")
    e.mode = Effort::Mode::automatic;
  else if (mode == "exact")
    e.mode = Effort::Mode::exact;
  else if (mode == "heuristic")
    e.mode = Effort::Mode::heuristic;
  else
    throw InvalidArgument("unknown effort mode '" + mode + "'");
  e.restarts = j.value("restarts", e.restarts);
  e.exact_cap = j.value("exact_cap", e.exact_cap);
  e.node_budget = j.value("node_budget", e.node_budget);
  e.local_search = j.value("local_search", e.local_search);
  return e;
}

const char* effort_mode_name(Effort::Mode m) {
  switch (m) {
    case Effort::Mode::automatic: return "auto";
    case Effort::Mode::exact: return "exact";
    case Effort::Mode::heuristic: return "heuristic";
  }
  return "auto";
}

std::string format_double(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

unsigned worker_count(unsigned configured) {
  if (configured) return configured;
  if (const char* env = std::getenv("BICLIQUE_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string reproduce_command(const ExperimentConfig& c, const TrialReport& r, const Seed& trial) {
  const auto& fp = c.options.fk_params;
  return "biclique gen --n " + std::to_string(r.n) + " --p " + format_double(c.p, "%.17g") + " --seed " +
         std::to_string(graph_seed(trial).value()) + " | biclique decompose --method " + r.method + " --seed " +
         std::to_string(trial.value()) + " --effort " + effort_mode_name(c.options.alpha_effort.mode) +
         " --restarts " + std::to_string(c.options.alpha_effort.restarts) + " --exact-cap " +
         std::to_string(c.options.alpha_effort.exact_cap) + " --local-search " +
         std::to_string(c.options.alpha_effort.local_search) + " --k " + std::to_string(fp.k) + " --r " +
         std::to_string(fp.r) + " --s " + std::to_string(fp.s) + " --tau " + std::to_string(fp.tau) + " --budget " +
         std::to_string(c.options.fk_budget.nodes);
}

}  // namespace

ExperimentConfig experiment_config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("experiment config must be a JSON object");
  ExperimentConfig c;
  try {
    const json& n = j.at("n");
    if (n.is_array())
      c.ns = n.get<std::vector<std::size_t>>();
    else
      c.ns = {n.get<std::size_t>()};
    c.p = j.value("p", c.p);
    c.trials = j.value("trials", c.trials);
    for (const auto& m : j.at("methods")) {
      auto method = parse_method(m.get<std::string>());
      if (!method) throw InvalidArgument("unknown method '" + m.get<std::string>() + "'");
      c.methods.push_back(*method);
    }
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("effort")) c.options.alpha_effort = effort_from_json(j.at("effort"));
    if (j.contains("fk")) {
      const json& f = j.at("fk");
      auto& fp = c.options.fk_params;
      fp = {f.value("k", fp.k), f.value("r", fp.r), f.value("s", fp.s), f.value("tau", fp.tau)};
      c.options.fk_budget.nodes = f.value("budget", c.options.fk_budget.nodes);
    }
    c.timing = j.value("timing", c.timing);
    c.max_n = j.value("max_n", c.max_n);
    c.workers = j.value("workers", c.workers);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad experiment config: ") + e.what());
  }
  c.validate();
  return c;
}

json experiment_config_to_json(const ExperimentConfig& c) {
  json methods = json::array();
  for (auto m : c.methods) methods.push_back(method_name(m));
  const auto& e = c.options.alpha_effort;
  const auto& fp = c.options.fk_params;
  return {{"n", c.ns},
          {"p", c.p},
          {"trials", c.trials},
          {"methods", methods},
          {"seed", c.seed},
          {"effort", {{"mode", effort_mode_name(e.mode)}, {"restarts", e.restarts}, {"exact_cap", e.exact_cap},
                      {"node_budget", e.node_budget},
                      {"local_search", e.local_search}}},
          {"fk", {{"k", fp.k}, {"r", fp.r}, {"s", fp.s}, {"tau", fp.tau}, {"budget", c.options.fk_budget.nodes}}},
          {"timing", c.timing},
          {"max_n", c.max_n}};
}

std::string csv_row(const TrialReport& r) {
  return std::to_string(r.n) + "," + format_double(r.p, "%g") + "," + std::to_string(r.seed) + "," +
         std::to_string(r.trial) + "," + r.method + "," + std::to_string(r.alpha_hat) + "," + std::to_string(r.size) +
         "," + std::to_string(r.savings) + "," + std::to_string(r.pairs_found) + "," + std::to_string(r.pairs_selected) +
         "," + format_double(r.elapsed_ms, "%.3f");
}

Seed trial_seed(std::uint64_t seed, std::size_t n, unsigned trial) {
  return Seed(seed).derive("n", n).derive("trial", trial);
}

Seed graph_seed(const Seed& trial) { return trial.derive("graph"); }

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  struct Task {
    std::size_t n;
    unsigned trial;
  };
  std::vector<Task> tasks;
  for (auto n : config.ns)
    for (unsigned t = 0; t < config.trials; ++t) tasks.push_back({n, t});

  std::vector<std::vector<TrialReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const Task& task = tasks[i];
        const Seed seed = trial_seed(config.seed, task.n, task.trial);
        const Graph g = gnp(task.n, config.p, graph_seed(seed), config.max_n);
        for (const Method m : config.methods) {
          const auto start = std::chrono::steady_clock::now();
          DecomposeOutcome out = decompose(g, m, config.options, seed);
          const auto stop = std::chrono::steady_clock::now();
          TrialReport r;
          r.n = task.n;
          r.p = config.p;
          r.seed = seed.value();
          r.trial = task.trial;
          r.method = method_name(m);
          r.alpha_hat = out.alpha_hat;
          r.size = out.partition.size();
          r.savings = static_cast<long long>(r.n) - static_cast<long long>(r.alpha_hat) - static_cast<long long>(r.size);
          if (out.three_stage) {
            r.pairs_found = out.three_stage->pairs_found;
            r.pairs_selected = out.three_stage->pairs_selected;
          }
          if (config.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          if (auto bad = validate(g, out.partition)) {
            throw ValidationFailure("trial n=" + std::to_string(r.n) + " trial=" + std::to_string(r.trial) +
                                    " method=" + r.method + ": " + bad->describe() +
                                    "; reproduce with: " + reproduce_command(config, r, seed));
          }
          results[i].push_back(std::move(r));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(worker_count(config.workers), tasks.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentResult out;
  for (auto& rows : results)
    for (auto& r : rows) out.rows.push_back(std::move(r));
  // Tasks are already in (n, trial) order; methods follow the configured order.
  out.csv = std::string(kCsvHeader) + "\n";
  for (const auto& r : out.rows) out.csv += csv_row(r) + "\n";

  struct Agg {
    std::size_t trials = 0;
    double savings_sum = 0, size_sum = 0, alpha_sum = 0;
    long long savings_min = 0, savings_max = 0;
    std::size_t pairs_selected_sum = 0;
  };
  std::vector<std::pair<std::size_t, std::string>> order;
  std::map<std::pair<std::size_t, std::string>, Agg> groups;
  for (const auto& r : out.rows) {
    auto key = std::make_pair(r.n, r.method);
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    Agg& a = it->second;
    if (a.trials == 0 || r.savings < a.savings_min) a.savings_min = r.savings;
    if (a.trials == 0 || r.savings > a.savings_max) a.savings_max = r.savings;
    ++a.trials;
    a.savings_sum += static_cast<double>(r.savings);
    a.size_sum += static_cast<double>(r.size);
    a.alpha_sum += static_cast<double>(r.alpha_hat);
    a.pairs_selected_sum += r.pairs_selected;
  }
  json summary_groups = json::array();
  for (const auto& key : order) {
    const Agg& a = groups.at(key);
    const double t = static_cast<double>(a.trials);
    summary_groups.push_back({{"n", key.first},
                              {"method", key.second},
                              {"trials", a.trials},
                              {"mean_alpha_hat", a.alpha_sum / t},
                              {"mean_size", a.size_sum / t},
                              {"savings", {{"mean", a.savings_sum / t}, {"min", a.savings_min}, {"max", a.savings_max}}},
                              {"mean_pairs_selected", static_cast<double>(a.pairs_selected_sum) / t}});
  }
  out.summary = {{"config", experiment_config_to_json(config)}, {"groups", summary_groups}};
  return out;
}

}  // namespace bcp
