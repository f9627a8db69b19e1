#include "labeling.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "errors.hpp"

namespace bcp {

std::string label_to_string(const Label& l, unsigned r) {
  std::string s(r, '2');
  for (unsigned i = 0; i < r; ++i) {
    if ((l.ones >> i) & 1U) s[i] = '1';
    if ((l.zeros >> i) & 1U) s[i] = '0';
  }
  return s;
}

Label label_from_string(std::string_view s) {
  if (s.size() > kMaxLabelDimension) throw InvalidArgument("label longer than 64 coordinates");
  Label l;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '1': l.ones |= std::uint64_t{1} << i; break;
      case '0': l.zeros |= std::uint64_t{1} << i; break;
      case '2': break;
      default: throw InvalidArgument("label characters must be 0, 1 or 2");
    }
  }
  return l;
}

VectorLabeling encode_partition(const BicliquePartition& p) {
  if (p.blocks.size() > kMaxLabelDimension) throw InvalidArgument("partition has more than 64 blocks");
  VectorLabeling out{static_cast<unsigned>(p.blocks.size()), std::vector<Label>(p.n)};
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    p.blocks[i].left.for_each([&](Vertex v) { out.labels[v].ones |= bit; });
    p.blocks[i].right.for_each([&](Vertex v) { out.labels[v].zeros |= bit; });
  }
  return out;
}

BicliquePartition labeling_blocks(const VectorLabeling& l) {
  const std::size_t n = l.labels.size();
  BicliquePartition p{n, {}};
  for (unsigned i = 0; i < l.r; ++i) {
    VertexSet left(n), right(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((l.labels[v].ones >> i) & 1U) left.set(v);
      if ((l.labels[v].zeros >> i) & 1U) right.set(v);
    }
    if (!left.empty() && !right.empty()) p.add(std::move(left), std::move(right));
  }
  return p;
}

std::variant<BicliquePartition, Violation> decode_labeling(const Graph& g, const VectorLabeling& l) {
  if (l.labels.size() != g.size()) throw InvalidArgument("labeling does not cover every vertex");
  BicliquePartition p = labeling_blocks(l);
  if (auto bad = validate(g, p)) return *bad;
  return p;
}

std::optional<Graph> labeling_graph(const VectorLabeling& l) {
  const std::size_t n = l.labels.size();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int c = crossing_count(l.labels[u], l.labels[v]);
      if (c > 1) return std::nullopt;
      if (c == 1) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

// Backtracking over per-vertex labels for a fixed r. Each vertex's label is built one
// coordinate at a time: non-edges to placed vertices forbid the opposite value, and edges
// to placed vertices need exactly one crossing coordinate. Symmetry breaking: coordinates
// are opened in increasing order and the first vertex to use one takes value 1.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, unsigned r) : g_(g), r_(r) {
    // Static order: highest degree first, then the vertex with most already-ordered
    // neighbours (ties by degree, then index).
    const std::size_t n = g.size();
    VertexSet pending(n), ordered(n);
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) > 0) pending.set(v);
    while (!pending.empty()) {
      Vertex best = VertexSet::npos;
      std::size_t best_links = 0, best_deg = 0;
      pending.for_each([&](Vertex v) {
        const std::size_t links = g.neighbors(v).intersect_count(ordered);
        const std::size_t deg = g.degree(v);
        if (best == VertexSet::npos || links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      });
      order_.push_back(best);
      ordered.set(best);
      pending.reset(best);
    }
    labels_.assign(n, Label{});
  }

  bool run() { return place(0, 0); }
  const std::vector<Label>& labels() const { return labels_; }

 private:
  static constexpr unsigned kZero = 1, kOne = 2, kTwo = 4;

  struct Frame {
    Vertex v;
    unsigned opened;
    std::vector<unsigned> allowed;          // per coordinate, subset of {0,1,2}
    std::vector<Vertex> partners;           // placed neighbours of v
    std::vector<int> crossings;             // crossings so far with each partner
    std::vector<std::uint64_t> partner_support;
    std::vector<int> twin_column;           // previous coordinate with an identical column, or -1
  };

  // Interchangeable coordinates take values sorted by this rank (1 before 0 before 2).
  static int rank(unsigned value) { return value == kOne ? 2 : value == kZero ? 1 : 0; }
  static unsigned value_at(const Label& l, unsigned i) {
    if ((l.ones >> i) & 1U) return kOne;
    if ((l.zeros >> i) & 1U) return kZero;
    return kTwo;
  }

  // Every unplaced vertex must still be able to cross each placed neighbour somewhere,
  // given the values its placed non-neighbours forbid. Returns the most constrained
  // unplaced position (most placed neighbours, then fewest usable coordinates), or npos
  // when some vertex has no way left.
  std::size_t forward_check(std::size_t depth) const {
    std::size_t best = depth, best_links = 0;
    int best_room = 0;
    for (std::size_t w = depth; w < order_.size(); ++w) {
      const Vertex x = order_[w];
      std::uint64_t can0 = ~std::uint64_t{0}, can1 = ~std::uint64_t{0};
      for (std::size_t d = 0; d < depth; ++d) {
        const Vertex u = order_[d];
        if (!g_.adjacent(u, x)) {
          can0 &= ~labels_[u].ones;
          can1 &= ~labels_[u].zeros;
        }
      }
      std::size_t links = 0;
      for (std::size_t d = 0; d < depth; ++d) {
        const Vertex u = order_[d];
        if (!g_.adjacent(u, x)) continue;
        if (!((labels_[u].ones & can0) | (labels_[u].zeros & can1))) return kNone;
        ++links;
      }
      const int room = std::popcount(can0 & kMask(r_)) + std::popcount(can1 & kMask(r_));
      if (w == depth || links > best_links || (links == best_links && room < best_room)) {
        best = w;
        best_links = links;
        best_room = room;
      }
    }
    return best;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static std::uint64_t kMask(unsigned r) { return r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1; }

  bool place(std::size_t depth, unsigned opened) {
    if (depth == order_.size()) return true;
    const std::size_t next = forward_check(depth);
    if (next == kNone) return false;
    std::swap(order_[depth], order_[next]);
    const bool found = place_at(depth, opened);
    if (!found) std::swap(order_[depth], order_[next]);
    return found;
  }

  bool place_at(std::size_t depth, unsigned opened) {
    Frame f;
    f.v = order_[depth];
    f.opened = opened;
    f.allowed.assign(r_, kZero | kOne | kTwo);
    for (unsigned i = opened; i < r_; ++i) f.allowed[i] = kOne | kTwo;
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex u = order_[d];
      const Label& lu = labels_[u];
      if (g_.adjacent(u, f.v)) {
        f.partners.push_back(u);
        f.partner_support.push_back(lu.support());
      } else {
        for (unsigned i = 0; i < r_; ++i) {
          if ((lu.ones >> i) & 1U) f.allowed[i] &= ~kZero;
          if ((lu.zeros >> i) & 1U) f.allowed[i] &= ~kOne;
        }
      }
    }
    f.crossings.assign(f.partners.size(), 0);
    f.twin_column.assign(r_, -1);
    for (unsigned i = 1; i < r_; ++i) {
      for (int j = static_cast<int>(i) - 1; j >= 0 && f.twin_column[i] < 0; --j) {
        bool same = true;
        for (std::size_t d = 0; d < depth && same; ++d) {
          const Label& l = labels_[order_[d]];
          same = value_at(l, i) == value_at(l, static_cast<unsigned>(j));
        }
        if (same) f.twin_column[i] = j;
      }
    }
    Label cur;
    return extend(f, depth, 0, cur, false);
  }

  // Choose coordinate i of f.v's label. fresh_closed: an unopened coordinate was left at 2,
  // so every later unopened coordinate must stay 2.
  bool extend(Frame& f, std::size_t depth, unsigned i, Label& cur, bool fresh_closed) {
    if (i == r_) {
      if (cur.support() == 0) return false;
      for (int c : f.crossings)
        if (c != 1) return false;
      labels_[f.v] = cur;
      unsigned opened = f.opened;
      while (opened < r_ && ((cur.support() >> opened) & 1U)) ++opened;
      if (place(depth + 1, opened)) return true;
      labels_[f.v] = Label{};
      return false;
    }
    // A partner still at zero crossings needs a remaining coordinate that can cross it.
    const std::uint64_t rest = i >= 64 ? 0 : ~std::uint64_t{0} << i;
    for (std::size_t p = 0; p < f.partners.size(); ++p)
      if (f.crossings[p] == 0 && !(f.partner_support[p] & rest)) return false;

    const bool fresh = i >= f.opened;
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (unsigned value : {kOne, kZero, kTwo}) {
      if (!(f.allowed[i] & value)) continue;
      if (fresh && fresh_closed && value != kTwo) continue;
      if (f.twin_column[i] >= 0 && rank(value) > rank(value_at(cur, static_cast<unsigned>(f.twin_column[i])))) continue;
      bool ok = true;
      std::size_t touched = 0;
      if (value != kTwo) {
        for (; touched < f.partners.size(); ++touched) {
          const Label& lu = labels_[f.partners[touched]];
          const bool crosses = value == kOne ? (lu.zeros & bit) != 0 : (lu.ones & bit) != 0;
          if (crosses && ++f.crossings[touched] > 1) {
            ++touched;
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        if (value == kOne) cur.ones |= bit;
        if (value == kZero) cur.zeros |= bit;
        if (extend(f, depth, i + 1, cur, fresh_closed || (fresh && value == kTwo))) return true;
        cur.ones &= ~bit;
        cur.zeros &= ~bit;
      }
      if (value != kTwo) {
        for (std::size_t p = 0; p < touched; ++p) {
          const Label& lu = labels_[f.partners[p]];
          const bool crosses = value == kOne ? (lu.zeros & bit) != 0 : (lu.ones & bit) != 0;
          if (crosses) --f.crossings[p];
        }
      }
    }
    return false;
  }

  const Graph& g_;
  unsigned r_;
  std::vector<Vertex> order_;
  std::vector<Label> labels_;
};

}  // namespace

std::optional<ExactBcResult> exact_bc(const Graph& g, const ExactBcOptions& opts) {
  if (g.size() > opts.max_vertices) {
    throw BudgetExceeded("exact bc limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
  const unsigned cap = opts.max_r.value_or(static_cast<unsigned>(g.size()));
  if (cap > kMaxLabelDimension) throw InvalidArgument("exact bc cap above 64");
  for (auto r = static_cast<unsigned>(inertia_lower_bound(g)); r <= cap; ++r) {
    LabelSearch search(g, r);
    if (search.run()) return ExactBcResult{r, VectorLabeling{r, search.labels()}};
  }
  return std::nullopt;
}

}  // namespace bcp
