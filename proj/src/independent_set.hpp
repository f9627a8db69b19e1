#pragma once

#include <cstddef>
#include <cstdint>

#include "graph.hpp"

namespace bcp {

struct Effort {
  enum class Mode { automatic, exact, heuristic };

  Mode mode = Mode::automatic;
  /// Randomized greedy restarts in heuristic mode.
  unsigned restarts = 32;
  /// Exact mode refuses restrictions larger than this.
  std::size_t exact_cap = 150;
  /// Branch-and-bound node limit; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Perturbation steps of the swap local search after the greedy restarts (heuristic mode).
  unsigned local_search = 2000;

  static Effort exact(std::size_t cap = 150) { return {Mode::exact, 0, cap, 0, 0}; }
  static Effort heuristic(unsigned restarts = 32, unsigned local_search = 2000) {
    return {Mode::heuristic, restarts, 150, 0, local_search};
  }
};

/// Independent subset of `restrict`. Exact mode (and automatic mode under the cap)
/// returns a maximum one; exact mode over the cap throws BudgetExceeded.
VertexSet independent_set(const Graph& g, const VertexSet& restrict, const Effort& effort, const Seed& seed);

}  // namespace bcp
