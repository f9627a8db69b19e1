#pragma once

// Brute-force reference computations used only by tests. Each one avoids the code path it
// checks: subset enumeration for independent sets, exact cover over enumerated bicliques
// for bc, a running product for the birthday probability.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "graph.hpp"

namespace oracle {

inline std::size_t max_independent_size(const bcp::Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (bcp::Vertex u = 0; u < n && ok; ++u)
      if ((mask >> u) & 1U)
        for (bcp::Vertex v = u + 1; v < n && ok; ++v)
          if (((mask >> v) & 1U) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Minimum number of bicliques partitioning E(g), by exact cover over every biclique's
/// edge set. Feasible for n <= 6.
inline unsigned brute_force_bc(const bcp::Graph& g) {
  const unsigned n = static_cast<unsigned>(g.size());
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::map<std::pair<unsigned, unsigned>, unsigned> edge_index;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) {
        edge_index[{u, v}] = static_cast<unsigned>(edges.size());
        edges.push_back({u, v});
      }
  if (edges.empty()) return 0;
  // Every biclique as an edge mask: ordered pair (L, R) of disjoint nonempty sets, L's
  // smallest vertex below R's to avoid listing both orientations.
  std::vector<std::uint64_t> bicliques;
  for (unsigned l = 1; l < (1U << n); ++l)
    for (unsigned r = 1; r < (1U << n); ++r) {
      if (l & r) continue;
      if (__builtin_ctz(l) > __builtin_ctz(r)) continue;
      std::uint64_t mask = 0;
      bool complete = true;
      for (unsigned u = 0; u < n && complete; ++u)
        if ((l >> u) & 1U)
          for (unsigned v = 0; v < n && complete; ++v)
            if ((r >> v) & 1U) {
              if (!g.adjacent(u, v)) complete = false;
              else mask |= std::uint64_t{1} << edge_index.at({std::min(u, v), std::max(u, v)});
            }
      if (complete) bicliques.push_back(mask);
    }
  std::sort(bicliques.begin(), bicliques.end());
  bicliques.erase(std::unique(bicliques.begin(), bicliques.end()), bicliques.end());

  const std::uint64_t all = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
  unsigned best = static_cast<unsigned>(edges.size());
  std::function<void(std::uint64_t, unsigned)> search = [&](std::uint64_t covered, unsigned used) {
    if (covered == all) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    const int e = __builtin_ctzll(~covered & all);
    for (auto b : bicliques)
      if (((b >> e) & 1U) && !(b & covered)) search(covered | b, used + 1);
  };
  search(0, 0);
  return best;
}

/// Probability that a uniform draws (with replacement) from b items are all distinct.
inline double distinct_probability(std::uint64_t a, std::uint64_t b) {
  double p = 1.0;
  for (std::uint64_t i = 1; i < a && p > 0; ++i) p *= 1.0 - static_cast<double>(i) / static_cast<double>(b);
  return p;
}

inline bcp::Graph graph_from_mask(unsigned n, std::uint64_t mask) {
  bcp::Graph g(n);
  unsigned bit = 0;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

/// Edge sets (pairs of original vertices, sorted) of every member of the patterned family
/// placed on `verts`: try every role per vertex (group 0..r-1 or B) and every pattern per B
/// vertex, keep the assignments meeting the definition, collect the distinct graphs.
using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

inline std::set<EdgeList> fk_members(const std::vector<unsigned>& verts, unsigned r, unsigned s, unsigned tau) {
  const unsigned k = static_cast<unsigned>(verts.size());
  std::set<EdgeList> out;
  std::vector<unsigned> role(k, 0);  // 0..r-1 group, r for B
  std::function<void(unsigned)> roles = [&](unsigned x) {
    if (x < k) {
      for (unsigned c = 0; c <= r; ++c) {
        role[x] = c;
        roles(x + 1);
      }
      return;
    }
    std::vector<unsigned> sizes(r + 1, 0);
    for (auto c : role) ++sizes[c];
    for (unsigned i = 0; i < r; ++i)
      if (sizes[i] != s) return;
    std::vector<unsigned> bs;
    for (unsigned x2 = 0; x2 < k; ++x2)
      if (role[x2] == r) bs.push_back(x2);
    std::vector<unsigned> pat(bs.size(), 0);
    std::function<void(std::size_t)> patterns = [&](std::size_t t) {
      if (t < bs.size()) {
        for (unsigned p = 0; p < (1U << r); ++p) {
          pat[t] = p;
          patterns(t + 1);
        }
        return;
      }
      for (std::size_t a = 0; a < pat.size(); ++a)
        for (std::size_t b = a + 1; b < pat.size(); ++b)
          if (pat[a] == pat[b]) return;
      for (unsigned i = 0; i < r; ++i) {
        unsigned ones = 0;
        for (auto p : pat) ones += (p >> i) & 1U;
        if (ones < tau) return;
        for (unsigned j = i + 1; j < r; ++j) {
          unsigned diff = 0;
          for (auto p : pat) diff += ((p >> i) ^ (p >> j)) & 1U;
          if (diff < tau) return;
        }
      }
      EdgeList edges;
      for (std::size_t t = 0; t < bs.size(); ++t)
        for (unsigned x2 = 0; x2 < k; ++x2)
          if (role[x2] < r && ((pat[t] >> role[x2]) & 1U))
            edges.push_back({std::min(verts[x2], verts[bs[t]]), std::max(verts[x2], verts[bs[t]])});
      std::sort(edges.begin(), edges.end());
      out.insert(edges);
    };
    patterns(0);
  };
  roles(0);
  return out;
}

}  // namespace oracle
