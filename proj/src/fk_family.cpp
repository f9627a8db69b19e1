#include "fk_family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace bcp::fk {

void FamilyParams::validate() const {
  if (r < 1 || s < 1) throw InvalidArgument("family needs r >= 1 and s >= 1");
  if (r > 64) throw InvalidArgument("family supports at most 64 groups");
  if (static_cast<std::uint64_t>(r) * s >= k) throw InvalidArgument("family needs r*s < k");
}

FamilyParams FamilyParams::default_shape(unsigned k) {
  return FamilyParams{k, std::max(1U, k / 100), 10, (k + 2) / 3};
}

std::vector<Vertex> PatternedBipartite::vertices() const {
  std::vector<Vertex> out;
  for (const auto& grp : groups) out.insert(out.end(), grp.begin(), grp.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool patterns_admissible(const FamilyParams& params, const std::vector<std::uint64_t>& patterns) {
  if (patterns.size() != params.b_size()) return false;
  const std::uint64_t mask = params.r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << params.r) - 1;
  std::vector<std::uint64_t> sorted = patterns;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (auto p : patterns)
    if (p & ~mask) return false;
  for (unsigned i = 0; i < params.r; ++i) {
    unsigned ones = 0;
    for (auto p : patterns) ones += (p >> i) & 1U;
    if (ones < params.tau) return false;
    for (unsigned j = i + 1; j < params.r; ++j) {
      unsigned differ = 0;
      for (auto p : patterns) differ += ((p >> i) ^ (p >> j)) & 1U;
      if (differ < params.tau) return false;
    }
  }
  return true;
}

namespace {

bool shape_ok(const PatternedBipartite& f, std::size_t n) {
  const FamilyParams& pr = f.params;
  if (pr.r < 1 || pr.s < 1 || pr.r > 64 || static_cast<std::uint64_t>(pr.r) * pr.s >= pr.k) return false;
  if (f.groups.size() != pr.r || f.b.size() != pr.b_size() || f.patterns.size() != f.b.size()) return false;
  for (const auto& grp : f.groups)
    if (grp.size() != pr.s) return false;
  std::vector<Vertex> all = f.vertices();
  for (auto v : all)
    if (v >= n) return false;
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

Graph member_graph(const PatternedBipartite& f, std::size_t n) {
  if (!shape_ok(f, n)) throw InvalidArgument("member witness is malformed");
  Graph g(n);
  for (std::size_t t = 0; t < f.b.size(); ++t)
    for (unsigned i = 0; i < f.params.r; ++i)
      if ((f.patterns[t] >> i) & 1U)
        for (auto a : f.groups[i]) g.add_edge(a, f.b[t]);
  return g;
}

bool is_member(const Graph& g, const PatternedBipartite& f) {
  const std::size_t n = g.size();
  if (!shape_ok(f, n) || !patterns_admissible(f.params, f.patterns)) return false;
  const VertexSet span = VertexSet::of(n, f.vertices());
  std::vector<VertexSet> group_sets;
  for (const auto& grp : f.groups) group_sets.push_back(VertexSet::of(n, grp));

  for (unsigned i = 0; i < f.params.r; ++i) {
    VertexSet expect(n);
    for (std::size_t t = 0; t < f.b.size(); ++t)
      if ((f.patterns[t] >> i) & 1U) expect.set(f.b[t]);
    for (auto a : f.groups[i])
      if ((g.neighbors(a) & span) != expect) return false;
  }
  for (std::size_t t = 0; t < f.b.size(); ++t) {
    VertexSet expect(n);
    for (unsigned i = 0; i < f.params.r; ++i)
      if ((f.patterns[t] >> i) & 1U) expect |= group_sets[i];
    if ((g.neighbors(f.b[t]) & span) != expect) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> draw_distinct_patterns(const FamilyParams& params, Rng& rng) {
  const std::uint64_t space = params.r == 64 ? 0 : std::uint64_t{1} << params.r;
  std::unordered_set<std::uint64_t> used;
  std::vector<std::uint64_t> out;
  out.reserve(params.b_size());
  while (out.size() < params.b_size()) {
    const std::uint64_t p = space ? rng.below(space) : rng.next();
    if (used.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace

std::optional<PatternedBipartite> sample_member(const FamilyParams& params, const Seed& seed, unsigned attempts) {
  params.validate();
  if (params.r < 64 && (std::uint64_t{1} << params.r) < params.b_size()) {
    throw PreconditionError("2^r < |B|: no family of distinct patterns exists");
  }
  Rng rng(seed);
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    auto patterns = draw_distinct_patterns(params, rng);
    if (!patterns_admissible(params, patterns)) continue;
    std::vector<Vertex> slots(params.k);
    std::iota(slots.begin(), slots.end(), 0);
    rng.shuffle(slots);
    PatternedBipartite f{params, {}, {}, std::move(patterns)};
    for (unsigned i = 0; i < params.r; ++i)
      f.groups.emplace_back(slots.begin() + i * params.s, slots.begin() + (i + 1) * params.s);
    f.b.assign(slots.begin() + params.a_size(), slots.end());
    return f;
  }
  return std::nullopt;
}

BicliquePartition canonical_decomposition(const PatternedBipartite& f, std::size_t n) {
  if (!shape_ok(f, n)) throw InvalidArgument("member witness is malformed");
  BicliquePartition p{n, {}};
  for (unsigned i = 0; i < f.params.r; ++i) {
    VertexSet right(n);
    for (std::size_t t = 0; t < f.b.size(); ++t)
      if ((f.patterns[t] >> i) & 1U) right.set(f.b[t]);
    if (!right.empty()) p.add(VertexSet::of(n, f.groups[i]), std::move(right));
  }
  return p;
}

unsigned pair_bit(unsigned u, unsigned v, unsigned k) {
  if (u > v) std::swap(u, v);
  return u * k - u * (u + 1) / 2 + (v - u - 1);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) throw BudgetExceeded("count overflows 64 bits");
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = checked_mul(c, n - k + i) / i;
  return c;
}

std::uint64_t pattern_tuple_count(const FamilyParams& params) {
  const std::uint64_t bits = static_cast<std::uint64_t>(params.r) * params.b_size();
  if (bits >= 63) throw BudgetExceeded("pattern space too large to enumerate");
  return std::uint64_t{1} << bits;
}

std::vector<std::uint64_t> unpack_tuple(std::uint64_t code, const FamilyParams& params) {
  std::vector<std::uint64_t> out(params.b_size());
  const std::uint64_t mask = (std::uint64_t{1} << params.r) - 1;
  for (auto& p : out) {
    p = code & mask;
    code >>= params.r;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> enumerate_member_keys(const FamilyParams& params, std::uint64_t work_cap) {
  params.validate();
  if (params.k > 11) throw BudgetExceeded("raw member enumeration limited to k <= 11");
  const unsigned k = params.k;
  const std::uint64_t tuples = pattern_tuple_count(params);

  // Ordered role assignments: multinomial(k; s, ..., s, |B|).
  std::uint64_t assignments = 1;
  unsigned left = k;
  for (unsigned i = 0; i < params.r; ++i) {
    assignments = checked_mul(assignments, binomial(left, params.s));
    left -= params.s;
  }
  if (checked_mul(assignments, tuples) > work_cap) throw BudgetExceeded("member enumeration exceeds the work cap");

  std::vector<std::vector<std::uint64_t>> admissible;
  for (std::uint64_t code = 0; code < tuples; ++code) {
    auto pats = unpack_tuple(code, params);
    if (patterns_admissible(params, pats)) admissible.push_back(std::move(pats));
  }

  std::unordered_set<std::uint64_t> keys;
  std::vector<int> role(k, -1);  // group index, or r for B
  std::vector<unsigned> filled(params.r + 1, 0);
  const auto capacity = [&](unsigned g) { return g < params.r ? params.s : params.b_size(); };

  const auto emit = [&] {
    std::vector<std::vector<Vertex>> groups(params.r);
    std::vector<Vertex> bs;
    for (unsigned v = 0; v < k; ++v) {
      if (role[v] == static_cast<int>(params.r))
        bs.push_back(v);
      else
        groups[role[v]].push_back(v);
    }
    for (const auto& pats : admissible) {
      std::uint64_t key = 0;
      for (std::size_t t = 0; t < bs.size(); ++t)
        for (unsigned i = 0; i < params.r; ++i)
          if ((pats[t] >> i) & 1U)
            for (auto a : groups[i]) key |= std::uint64_t{1} << pair_bit(a, bs[t], k);
      keys.insert(key);
    }
  };

  const auto assign = [&](auto&& self, unsigned v) -> void {
    if (v == k) {
      emit();
      return;
    }
    for (unsigned g = 0; g <= params.r; ++g) {
      if (filled[g] == capacity(g)) continue;
      role[v] = static_cast<int>(g);
      ++filled[g];
      self(self, v + 1);
      --filled[g];
    }
  };
  assign(assign, 0);

  std::vector<std::uint64_t> out(keys.begin(), keys.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_members(const FamilyParams& params, std::uint64_t work_cap) {
  return enumerate_member_keys(params, work_cap).size();
}

std::uint64_t count_by_placement(const FamilyParams& params, std::uint64_t work_cap) {
  params.validate();
  const std::uint64_t tuples = pattern_tuple_count(params);
  if (tuples > work_cap) throw BudgetExceeded("pattern enumeration exceeds the work cap");
  std::uint64_t placements = 1;
  for (unsigned j = 0; j < params.r; ++j) placements = checked_mul(placements, binomial(params.k - j * params.s, params.s));
  for (unsigned j = 2; j <= params.r; ++j) placements /= j;  // groups are unordered
  std::uint64_t valid = 0;
  for (std::uint64_t code = 0; code < tuples; ++code)
    if (patterns_admissible(params, unpack_tuple(code, params))) ++valid;
  return checked_mul(placements, valid);
}

double count_formula_upper(const FamilyParams& params) {
  const double k = params.k, r = params.r, s = params.s;
  // prod_j C(k - js, s) = k! / ((s!)^r (k - rs)!)
  return std::lgamma(k + 1) - r * std::lgamma(s + 1) - std::lgamma(k - r * s + 1) - std::lgamma(r + 1) +
         r * (k - r * s) * std::log(2.0);
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const FamilyParams& params, const Seed& seed, SearchBudget budget)
      : g_(g), params_(params), budget_(budget), rng_(seed) {
    order_.resize(g.size());
    std::iota(order_.begin(), order_.end(), 0);
    rng_.shuffle(order_);
  }

  std::optional<PatternedBipartite> run() {
    VertexSet candidates = VertexSet::full(g_.size());
    try {
      if (grow_b(candidates, 0)) return result_;
    } catch (const OutOfBudget&) {
    }
    return std::nullopt;
  }

 private:
  struct OutOfBudget {};

  struct MaskClass {
    std::uint64_t mask;
    std::vector<Vertex> members;
  };

  void tick() {
    if (++nodes_ > budget_.nodes) throw OutOfBudget{};
  }

  // B grows through vertices in seeded order, each non-adjacent to the previous picks.
  bool grow_b(const VertexSet& candidates, std::size_t from) {
    tick();
    if (b_.size() == params_.b_size()) return solve_groups();
    const std::size_t need = params_.b_size() - b_.size();
    for (std::size_t i = from; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      if (!candidates.test(v)) continue;
      if (order_.size() - i < need) break;
      VertexSet next = candidates - g_.neighbors(v);
      next.reset(v);
      b_.push_back(v);
      if (grow_b(next, i + 1)) return true;
      b_.pop_back();
    }
    return false;
  }

  bool solve_groups() {
    const std::size_t n = g_.size();
    VertexSet bset = VertexSet::of(n, b_);
    std::unordered_map<std::uint64_t, std::vector<Vertex>> by_mask;
    for (const Vertex v : order_) {
      if (bset.test(v)) continue;
      std::uint64_t mask = 0;
      for (std::size_t t = 0; t < b_.size(); ++t)
        if (g_.adjacent(v, b_[t])) mask |= std::uint64_t{1} << t;
      if (static_cast<unsigned>(std::popcount(mask)) < params_.tau) continue;
      by_mask[mask].push_back(v);
    }
    classes_.clear();
    for (auto& [mask, members] : by_mask)
      if (members.size() >= params_.s) classes_.push_back({mask, std::move(members)});
    std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.mask < b.mask; });
    if (classes_.size() < params_.r && params_.tau > 0) return false;
    chosen_masks_.clear();
    groups_.clear();
    used_ = VertexSet(n);
    blocked_ = VertexSet(n);
    return pick_class(0);
  }

  bool pick_class(std::size_t from) {
    tick();
    if (groups_.size() == params_.r) return finish();
    for (std::size_t c = from; c < classes_.size(); ++c) {
      const std::uint64_t mask = classes_[c].mask;
      bool separated = true;
      for (auto m : chosen_masks_)
        if (static_cast<unsigned>(std::popcount(m ^ mask)) < params_.tau) separated = false;
      if (!separated) continue;
      chosen_masks_.push_back(mask);
      groups_.emplace_back();
      // With tau = 0 two groups may share a neighbourhood class.
      const std::size_t next_from = params_.tau == 0 ? c : c + 1;
      if (pick_members(c, 0, next_from)) return true;
      groups_.pop_back();
      chosen_masks_.pop_back();
    }
    return false;
  }

  // A vertices must be pairwise non-adjacent; blocked_ holds neighbours of chosen ones.
  bool pick_members(std::size_t c, std::size_t from, std::size_t next_class) {
    tick();
    auto& grp = groups_.back();
    if (grp.size() == params_.s) return pick_class(next_class);
    const auto& members = classes_[c].members;
    for (std::size_t i = from; i < members.size(); ++i) {
      if (members.size() - i < params_.s - grp.size()) break;
      const Vertex v = members[i];
      if (used_.test(v) || blocked_.test(v)) continue;
      const VertexSet saved = blocked_;
      grp.push_back(v);
      used_.set(v);
      blocked_ |= g_.neighbors(v);
      if (pick_members(c, i + 1, next_class)) return true;
      blocked_ = saved;
      used_.reset(v);
      grp.pop_back();
    }
    return false;
  }

  bool finish() {
    std::vector<std::uint64_t> patterns(b_.size(), 0);
    for (std::size_t t = 0; t < b_.size(); ++t)
      for (unsigned i = 0; i < params_.r; ++i)
        if ((chosen_masks_[i] >> t) & 1U) patterns[t] |= std::uint64_t{1} << i;
    if (!patterns_admissible(params_, patterns)) return false;
    PatternedBipartite f{params_, groups_, b_, patterns};
    if (!is_member(g_, f)) return false;
    result_ = std::move(f);
    return true;
  }

  const Graph& g_;
  FamilyParams params_;
  SearchBudget budget_;
  Rng rng_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> b_;
  std::vector<MaskClass> classes_;
  std::vector<std::uint64_t> chosen_masks_;
  std::vector<std::vector<Vertex>> groups_;
  VertexSet used_;
  VertexSet blocked_;
  PatternedBipartite result_;
};

}  // namespace

std::optional<PatternedBipartite> find_induced_member(const Graph& g, const FamilyParams& params, const Seed& seed,
                                                      SearchBudget budget) {
  params.validate();
  if (params.k > g.size()) throw PreconditionError("family size k exceeds the host graph");
  if (params.b_size() > 64) throw InvalidArgument("search supports |B| <= 64");
  return InducedSearch(g, params, seed, budget).run();
}

std::optional<PlantedInstance> plant_member(std::size_t n, const FamilyParams& params, const Seed& seed,
                                            unsigned attempts) {
  params.validate();
  if (params.k > n) throw PreconditionError("family size k exceeds n");
  auto member = sample_member(params, seed.derive("member"), attempts);
  if (!member) return std::nullopt;

  Rng rng(seed.derive("placement"));
  std::vector<Vertex> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  rng.shuffle(slots);
  PatternedBipartite f = *member;
  for (auto& grp : f.groups)
    for (auto& v : grp) v = slots[v];
  for (auto& v : f.b) v = slots[v];

  Graph g = gnp(n, 0.5, seed.derive("background"));
  const auto span = f.vertices();
  for (std::size_t x = 0; x < span.size(); ++x)
    for (std::size_t y = x + 1; y < span.size(); ++y) g.remove_edge(span[x], span[y]);
  const Graph planted = member_graph(f, n);
  for (auto u : span) planted.neighbors(u).for_each([&](Vertex v) { g.add_edge(u, v); });
  return PlantedInstance{std::move(g), std::move(f)};
}

BicliquePartition fk_decomposition(const Graph& g, const PatternedBipartite& f) {
  if (!is_member(g, f)) throw PreconditionError("witness is not an induced member of the graph");
  BicliquePartition p = canonical_decomposition(f, g.size());
  const VertexSet outside = VertexSet::full(g.size()) - VertexSet::of(g.size(), f.vertices());
  BicliquePartition stars = star_cover(g, outside);
  for (auto& blk : stars.blocks) p.blocks.push_back(std::move(blk));
  return p;
}

JointExtension joint_extension_count(const FamilyParams& params, const std::vector<Vertex>& common,
                                     std::uint64_t work_cap) {
  params.validate();
  const unsigned k = params.k;
  if (common.size() > k) throw InvalidArgument("overlap larger than k");
  for (auto v : common)
    if (v >= k) throw InvalidArgument("overlap vertex outside K");

  const auto keys = enumerate_member_keys(params, work_cap);
  std::uint64_t restrict_mask = 0;
  for (std::size_t x = 0; x < common.size(); ++x)
    for (std::size_t y = x + 1; y < common.size(); ++y) restrict_mask |= std::uint64_t{1} << pair_bit(common[x], common[y], k);

  // Both K and K' carry a member; they must agree on the pairs inside the overlap.
  // Relabelling K' onto K fixes the overlap, so the members on K' restrict exactly like those on K.
  std::unordered_map<std::uint64_t, std::uint64_t> hist;
  for (auto key : keys) ++hist[key & restrict_mask];
  JointExtension out;
  out.common = common;
  out.j = k - static_cast<unsigned>(common.size());
  for (const auto& [_, c] : hist) out.count += c * c;
  out.bound = static_cast<long double>(keys.size()) *
              std::pow(static_cast<long double>(params.r) + std::pow(2.0L, params.r), out.j) *
              std::pow(2.0L, static_cast<long double>(params.b_size()) * out.j / params.s);
  return out;
}

std::vector<JointExtension> all_joint_extension_counts(const FamilyParams& params, unsigned j, std::uint64_t work_cap) {
  params.validate();
  if (j > params.k) throw InvalidArgument("j exceeds k");
  std::vector<JointExtension> out;
  std::vector<bool> keep(params.k, false);
  std::fill(keep.begin(), keep.begin() + (params.k - j), true);
  do {
    std::vector<Vertex> common;
    for (unsigned v = 0; v < params.k; ++v)
      if (keep[v]) common.push_back(v);
    out.push_back(joint_extension_count(params, common, work_cap));
  } while (std::prev_permutation(keep.begin(), keep.end()));
  return out;
}

}  // namespace bcp::fk
