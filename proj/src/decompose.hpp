#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fk_family.hpp"
#include "independent_set.hpp"
#include "partition.hpp"
#include "three_stage.hpp"

namespace bcp {

enum class Method { stars, three_stage, fk };

std::optional<Method> parse_method(std::string_view name);
std::string method_name(Method m);

struct DecomposeOptions {
  Effort alpha_effort;
  fk::FamilyParams fk_params{12, 3, 2, 3};
  fk::SearchBudget fk_budget;
};

struct DecomposeOutcome {
  Method method = Method::stars;
  BicliquePartition partition;
  /// Independent set behind the star baseline; alpha_hat is its size.
  VertexSet alpha_witness;
  std::size_t alpha_hat = 0;
  std::optional<ThreeStageReport> three_stage;
  std::optional<fk::PatternedBipartite> fk_witness;
  /// The method's own result was larger than the star baseline (or absent) and was replaced by it.
  bool fell_back = false;
};

/// Runs one method. Results never exceed n - alpha_hat blocks: a larger result falls back
/// to the star decomposition over the same independent set.
DecomposeOutcome decompose(const Graph& g, Method method, const DecomposeOptions& options, const Seed& seed);

}  // namespace bcp
