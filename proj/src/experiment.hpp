#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "decompose.hpp"
#include "errors.hpp"

namespace bcp {

struct ExperimentConfig {
  std::vector<std::size_t> ns;
  double p = 0.5;
  unsigned trials = 1;
  std::vector<Method> methods;
  std::uint64_t seed = 0;
  DecomposeOptions options;
  /// Record wall-clock time per trial; off keeps the CSV byte-identical across reruns.
  bool timing = false;
  std::size_t max_n = std::size_t{1} << 14;
  /// 0 means BICLIQUE_WORKERS from the environment, else the hardware thread count.
  unsigned workers = 0;

  /// Throws InvalidArgument on an empty n list or method list, zero trials, or n above max_n.
  void validate() const;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
nlohmann::json experiment_config_to_json(const ExperimentConfig& c);

struct TrialReport {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;  // per-trial seed
  unsigned trial = 0;
  std::string method;
  std::size_t alpha_hat = 0;
  std::size_t size = 0;
  long long savings = 0;  // n - alpha_hat - size
  std::size_t pairs_found = 0;
  std::size_t pairs_selected = 0;
  double elapsed_ms = 0;
};

inline constexpr const char* kCsvHeader = "n,p,seed,trial,method,alpha_hat,size,savings,pairs_found,pairs_selected,elapsed_ms";

std::string csv_row(const TrialReport& r);

struct ExperimentResult {
  std::vector<TrialReport> rows;  // ordered by (n, trial, method)
  std::string csv;
  nlohmann::json summary;
};

/// A produced partition failed validation. what() carries a reproduction command.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

/// Per-trial seed derived from (seed, n, trial).
Seed trial_seed(std::uint64_t seed, std::size_t n, unsigned trial);
/// Seed of the trial's G(n,p) graph.
Seed graph_seed(const Seed& trial);

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace bcp
