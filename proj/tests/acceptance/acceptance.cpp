// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "asymptotics.hpp"
#include "errors.hpp"
#include "fk_family.hpp"
#include "graph.hpp"
#include "independent_set.hpp"
#include "labeling.hpp"
#include "partition.hpp"
#include "three_stage.hpp"
#include "twinfree.hpp"

using namespace bcp;
using namespace bcp::asym;
using namespace bcp::twinfree;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool run(int id, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d: %s (%.2f s) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

void graham_pollak(Outcome& o) {
  for (unsigned n = 2; n <= 8; ++n) {
    const Graph k = Graph::complete(n);
    const auto bc = exact_bc(k);
    o.require(bc && bc->bc == n - 1, "exact_bc(K_" + std::to_string(n) + ")");
    o.require(inertia_lower_bound(k) == n - 1, "inertia bound of K_" + std::to_string(n));
  }
  o.detail << "bc(K_n) = n-1 and max(n+, n-) = n-1 for n = 2..8";
}

void star_bound(Outcome& o) {
  const std::size_t ns[] = {64, 256, 1024};
  std::size_t checked = 0;
  for (unsigned t = 0; t < 200; ++t) {
    const std::size_t n = ns[t % 3];
    const Seed seed(1000 + t);
    const Graph g = gnp(n, 0.5, seed.derive("graph"));
    const VertexSet all = VertexSet::full(n);
    const VertexSet indep = independent_set(g, all, Effort{}, seed.derive("alpha"));
    const auto p = star_decomposition(g, indep);
    const std::string tag = "trial " + std::to_string(t) + " n=" + std::to_string(n);
    o.require(g.is_independent(indep), tag + " independent set");
    o.require(p.size() == n - indep.count(), tag + " size");
    o.require(!validate(g, p), tag + " validation");
    ++checked;
  }
  o.detail << checked << " trials, size = n - alpha_hat, all valid";
}

void three_stage(Outcome& o) {
  auto trial = [&](std::size_t n, std::uint64_t s) {
    const Graph g = gnp(n, 0.5, Seed(s).derive("graph"));
    const auto res = three_stage_decomposition(g, Seed(s));
    const std::string tag = "n=" + std::to_string(n) + " seed " + std::to_string(s);
    o.require(!validate(g, res.partition), tag + " validation");
    o.require(res.partition.size() <= n - res.independent.count() - res.selected.size(), tag + " size bound");
    o.require(res.report.partition_size == res.partition.size(), tag + " report");
    return res.selected.size();
  };
  std::size_t trials = 0;
  for (std::size_t n : {64, 256, 1024})
    for (std::uint64_t s = 0; s < 10; ++s, ++trials) trial(n, 2000 + s);
  std::size_t with_pairs = 0;
  std::size_t most = 0;
  for (std::uint64_t s = 0; s < 20; ++s, ++trials) {
    const std::size_t sel = trial(4096, 3000 + s);
    with_pairs += sel >= 1;
    most = std::max(most, sel);
  }
  o.require(with_pairs >= 1, "no trial at n=4096 selected a pair");
  o.detail << trials << " trials valid with size <= n - |I| - |S|; at n=4096 " << with_pairs
           << "/20 trials have |S| >= 1 (max " << most << ")";
}

void family_counts(Outcome& o) {
  const fk::FamilyParams base{8, 2, 2, 2};
  const auto count = fk::count_members(base);
  const auto placed = fk::count_by_placement(base);
  const auto brute = oracle::fk_members(range(0, 8), 2, 2, 2).size();
  o.require(count == 5040, "count_members(8,2,2,2) = " + std::to_string(count));
  o.require(placed == 5040, "count_by_placement(8,2,2,2) = " + std::to_string(placed));
  o.require(brute == 5040, "brute-force oracle = " + std::to_string(brute));

  std::size_t sets = 0;
  std::size_t exact_sets = 0;
  std::size_t skipped = 0;
  for (unsigned k = 3; k <= 9; ++k)
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 1; s <= 3; ++s)
        for (unsigned tau = 0; tau <= 3; ++tau) {
          if (r * s >= k) continue;
          const fk::FamilyParams p{k, r, s, tau};
          try {
            p.validate();
          } catch (const Error&) {
            continue;
          }
          std::uint64_t c = 0;
          std::uint64_t c2 = 0;
          try {
            c = fk::count_members(p, 20'000'000);
            c2 = fk::count_by_placement(p, 20'000'000);
          } catch (const BudgetExceeded&) {
            ++skipped;
            continue;
          }
          std::ostringstream tag;
          tag << "(" << k << "," << r << "," << s << "," << tau << ")";
          // Placements over-count graphs with more than one role assignment, never under-count.
          o.require(c <= c2, tag.str() + " placement count below distinct count");
          if (k <= 8) o.require(c == oracle::fk_members(range(0, k), r, s, tau).size(), tag.str() + " oracle");
          exact_sets += c == c2;
          o.require(c == 0 || std::log(static_cast<double>(c)) <= fk::count_formula_upper(p) + 1e-9,
                    tag.str() + " exceeds formula bound");
          ++sets;
        }
  o.detail << "5040 by both paths and the brute-force oracle; bound holds on " << sets
           << " enumerable parameter sets (" << skipped << " over the work cap, " << exact_sets
           << " with unambiguous roles)";
}

void planted(Outcome& o) {
  const fk::FamilyParams p{12, 3, 2, 3};
  const std::size_t n = 200;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::string tag = "fixture " + std::to_string(s);
    const auto inst = fk::plant_member(n, p, Seed(s));
    o.require(inst.has_value(), tag + " planting");
    if (!inst) continue;
    o.require(fk::is_member(inst->graph, inst->witness), tag + " witness");
    const auto canon = fk::canonical_decomposition(inst->witness, n);
    o.require(canon.size() <= p.r, tag + " canonical blocks");
    o.require(!validate(fk::member_graph(inst->witness, n), canon), tag + " canonical validation");
    const auto dec = fk::fk_decomposition(inst->graph, inst->witness);
    o.require(!validate(inst->graph, dec), tag + " decomposition validation");
    o.require(dec.size() <= n - p.k + p.r, tag + " size");
  }
  o.detail << "50 fixtures at n=200, (12,3,2,3): canonical <= 3 blocks, size <= 191";
}

void claim32(Outcome& o) {
  const fk::FamilyParams p{8, 2, 2, 2};
  std::size_t layouts = 0;
  for (unsigned j : {1U, 2U}) {
    const double bound_ln = claim32_bound(p, j).ln();
    for (const auto& e : fk::all_joint_extension_counts(p, j)) {
      o.require(std::log(static_cast<double>(e.count)) <= bound_ln,
                "j=" + std::to_string(j) + " layout exceeds bound");
      ++layouts;
    }
  }
  o.detail << layouts << " overlap layouts at (8,2,2,2), j = 1, 2, all within the bound";
}

void threshold(Outcome& o) {
  const double log2n = 1e6;
  const auto t = threshold_k(log2n);
  o.require(t.ratio >= 2.0357 && t.ratio <= 2.0377, "ratio out of bracket");
  o.require(t.savings_coefficient >= 2.015, "k - r below 2.015 log2 n");
  // Integer sizes: the largest whole k below the threshold with r rounded up.
  const double k = std::floor(t.k);
  const double r = std::ceil(k / 100);
  o.require(k - r >= 2.015 * log2n, "integer k - r below 2.015 log2 n");
  char buf[160];
  std::snprintf(buf, sizeof buf, "k/log2n = %.6f, (k - r)/log2n = %.6f", t.ratio, t.savings_coefficient);
  o.detail << buf;
}

void twin_free(Outcome& o) {
  for (unsigned r = 1; r <= 10; ++r) {
    const auto e = extremal_graph(r);
    const std::string tag = "r=" + std::to_string(r);
    o.require(e.graph.size() == (std::size_t{1} << (r + 1)) - 1, tag + " order");
    o.require(is_twin_free(e.graph), tag + " twin-free");
    const auto decoded = decode_labeling(e.graph, e.labeling);
    const auto* p = std::get_if<BicliquePartition>(&decoded);
    o.require(p && p->size() <= r && !validate(e.graph, *p), tag + " decoded partition");
  }
  for (unsigned r = 1; r <= 3; ++r) {
    const auto m = max_twinfree_order(r);
    o.require(m.order == (std::uint64_t{1} << (r + 1)) - 1, "max order r=" + std::to_string(r));
  }
  o.detail << "r = 1..10 order 2^(r+1)-1, twin-free, <= r blocks; max order 3, 7, 15 for r = 1, 2, 3";
}

void birthday(Outcome& o) {
  // Exact ln P(all distinct) accumulates in long double; the double bound is also compared
  // wherever it is a normal double.
  std::uint64_t pairs = 0;
  for (std::uint64_t b = 1; b <= 10000; ++b) {
    long double exact_ln = 0;
    for (std::uint64_t a = 1; a <= b; ++a, ++pairs) {
      if (a > 1) exact_ln += std::log1p(-static_cast<long double>(a - 1) / static_cast<long double>(b));
      const double x = static_cast<double>(a);
      const double y = static_cast<double>(b);
      const double bound_ln = birthday_upper_log(x, y).ln();
      const std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      if (exact_ln > bound_ln + 1e-12L * (1 - exact_ln)) {
        o.require(false, tag + " log domain");
        return;
      }
      const double bound = birthday_upper(x, y);
      if (bound >= std::numeric_limits<double>::min() &&
          static_cast<double>(std::exp(exact_ln)) > bound * (1 + 1e-12)) {
        o.require(false, tag + " double");
        return;
      }
    }
  }
  o.detail << pairs << " pairs a <= b <= 10^4, in log domain and in double where representable";
}

}  // namespace

int main() {
  bool ok = true;
  bool substitutes = true;
  ok &= run(1, graham_pollak);
  ok &= run(2, star_bound);
  for (auto [id, body] : std::vector<std::pair<int, void (*)(Outcome&)>>{
           {3, three_stage}, {4, family_counts}, {5, planted}, {6, claim32}, {7, threshold}}) {
    const bool pass = run(id, body);
    substitutes &= pass;
    ok &= pass;
  }
  ok &= run(8, twin_free);
  ok &= run(9, birthday);
  std::printf(
      "criterion 10: %s substituted, not reproduced: the asymptotic statement for n -> infinity is out of reach "
      "at desk scale; its finite ingredients are criteria 3 to 7\n",
      substitutes ? "PASS" : "FAIL");
  ok &= substitutes;
  return ok ? 0 : 1;
}
