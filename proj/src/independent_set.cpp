#include "independent_set.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace bcp {

namespace {

// Maximum clique in the complement of g[restrict], bitset branch-and-bound with
// greedy colouring bounds (MCQ ordering).
class MaxIndependentSearch {
 public:
  MaxIndependentSearch(const Graph& g, const std::vector<Vertex>& verts, std::uint64_t node_budget)
      : budget_(node_budget) {
    const std::size_t m = verts.size();
    // Order by non-degree (degree in the complement) descending.
    std::vector<std::size_t> codeg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !g.adjacent(verts[i], verts[j])) ++codeg[i];
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return codeg[a] > codeg[b]; });
    ordered_.resize(m);
    for (std::size_t i = 0; i < m; ++i) ordered_[i] = verts[order[i]];
    nonadj_.assign(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !g.adjacent(ordered_[i], ordered_[j])) nonadj_[i].set(static_cast<Vertex>(j));
  }

  std::vector<Vertex> run(std::size_t initial_best) {
    best_size_ = initial_best;
    VertexSet all = VertexSet::full(ordered_.size());
    expand(all);
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(ordered_[i]);
    return out;
  }

 private:
  void colour_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
    VertexSet uncoloured = p;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet q = uncoloured;
      for (Vertex v = q.first(); v != VertexSet::npos; v = q.next(v + 1)) {
        q -= nonadj_[v];
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(VertexSet p) {
    if (budget_ && ++nodes_ > budget_) throw BudgetExceeded("independent set search exceeded its node budget");
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    order.reserve(p.count());
    bound.reserve(p.count());
    colour_sort(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current_.size() + bound[idx] <= best_size_) return;
      const Vertex v = order[idx];
      current_.push_back(v);
      VertexSet next = p & nonadj_[v];
      if (next.empty()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::vector<Vertex> ordered_;
  std::vector<VertexSet> nonadj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::size_t best_size_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// One greedy pass: repeatedly take the candidate of minimum residual degree,
// ties broken by a random priority.
VertexSet greedy_pass(const Graph& g, const VertexSet& restrict, Rng& rng) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> priority(n);
  for (auto& x : priority) x = rng.next();
  VertexSet candidates = restrict;
  VertexSet chosen(n);
  while (!candidates.empty()) {
    Vertex best = VertexSet::npos;
    std::size_t best_deg = 0;
    candidates.for_each([&](Vertex v) {
      const std::size_t d = g.neighbors(v).intersect_count(candidates);
      if (best == VertexSet::npos || d < best_deg || (d == best_deg && priority[v] < priority[best])) {
        best = v;
        best_deg = d;
      }
    });
    chosen.set(best);
    candidates -= g.neighbors(best);
    candidates.reset(best);
  }
  return chosen;
}

// Iterated local search with (1,2)-swaps: drop one solution vertex and insert two of its
// non-adjacent neighbours that see no other solution vertex. A perturbation forces a random
// outside vertex in and evicts its solution neighbours; equal-size moves are accepted.
class SwapLocalSearch {
 public:
  SwapLocalSearch(const Graph& g, const VertexSet& restrict, Rng& rng)
      : g_(g), restrict_(restrict), rng_(rng), in_(g.size()), tight_(g.size(), 0), verts_(restrict.members()) {}

  VertexSet run(const VertexSet& start, unsigned iterations) {
    start.for_each([&](Vertex v) { insert(v); });
    improve();
    VertexSet best = in_;
    for (unsigned it = 0; it < iterations && !verts_.empty(); ++it) {
      const VertexSet before = in_;
      const Vertex v = verts_[rng_.below(verts_.size())];
      if (in_.test(v)) continue;
      g_.neighbors(v).for_each([&](Vertex u) {
        if (in_.test(u)) erase(u);
      });
      insert(v);
      improve();
      if (in_.count() > best.count()) best = in_;
      if (in_.count() < before.count()) restore(before);
    }
    return best;
  }

 private:
  void insert(Vertex v) {
    in_.set(v);
    g_.neighbors(v).for_each([&](Vertex u) { ++tight_[u]; });
  }
  void erase(Vertex v) {
    in_.reset(v);
    g_.neighbors(v).for_each([&](Vertex u) { --tight_[u]; });
  }
  void restore(const VertexSet& s) {
    for (Vertex v : in_.members())
      if (!s.test(v)) erase(v);
    s.for_each([&](Vertex v) {
      if (!in_.test(v)) insert(v);
    });
  }

  void add_free() {
    std::vector<Vertex> free;
    for (Vertex v : verts_)
      if (!in_.test(v) && tight_[v] == 0) free.push_back(v);
    rng_.shuffle(free);
    for (Vertex v : free)
      if (tight_[v] == 0 && !in_.test(v)) insert(v);
  }

  bool swap_once() {
    for (Vertex x : in_.members()) {
      std::vector<Vertex> one;
      g_.neighbors(x).for_each([&](Vertex u) {
        if (tight_[u] == 1 && restrict_.test(u)) one.push_back(u);
      });
      for (std::size_t a = 0; a < one.size(); ++a)
        for (std::size_t b = a + 1; b < one.size(); ++b)
          if (!g_.adjacent(one[a], one[b])) {
            erase(x);
            insert(one[a]);
            insert(one[b]);
            return true;
          }
    }
    return false;
  }

  void improve() {
    add_free();
    while (swap_once()) add_free();
  }

  const Graph& g_;
  const VertexSet& restrict_;
  Rng& rng_;
  VertexSet in_;
  std::vector<std::uint32_t> tight_;
  std::vector<Vertex> verts_;
};

}  // namespace

VertexSet independent_set(const Graph& g, const VertexSet& restrict, const Effort& effort, const Seed& seed) {
  if (restrict.universe() != g.size()) throw InvalidArgument("restriction set does not match the graph size");
  const std::size_t m = restrict.count();

  bool exact = effort.mode == Effort::Mode::exact;
  if (effort.mode == Effort::Mode::automatic) exact = m <= effort.exact_cap;
  if (exact && m > effort.exact_cap) {
    throw BudgetExceeded("exact independent set on " + std::to_string(m) + " vertices exceeds the cap of " +
                         std::to_string(effort.exact_cap));
  }

  Rng rng(seed);
  VertexSet best(g.size());
  const unsigned passes = exact ? 1 : std::max(1U, effort.restarts);
  for (unsigned i = 0; i < passes; ++i) {
    VertexSet s = greedy_pass(g, restrict, rng);
    if (s.count() > best.count()) best = std::move(s);
  }
  if (!exact && effort.local_search > 0 && m > 0) {
    VertexSet improved = SwapLocalSearch(g, restrict, rng).run(best, effort.local_search);
    if (improved.count() > best.count()) best = std::move(improved);
  }
  if (!exact || m == 0) return best;

  std::vector<Vertex> verts = restrict.members();
  MaxIndependentSearch search(g, verts, effort.node_budget);
  auto found = search.run(best.count());
  if (found.empty()) return best;  // greedy incumbent was already optimal
  return VertexSet::of(g.size(), found);
}

}  // namespace bcp
