#include "twinfree.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace bcp::twinfree {

ExtremalGraph extremal_graph(unsigned r) {
  if (r < 1 || r > kMaxConstructionDimension) {
    throw InvalidArgument("extremal construction needs 1 <= r <= " + std::to_string(kMaxConstructionDimension));
  }
  std::vector<Label> labels;
  // Prefix of length p over {0,2} (bit set = 0), a 1 at position p, then 2s.
  for (unsigned p = 0; p <= r; ++p) {
    for (std::uint64_t zeros = 0; zeros < (std::uint64_t{1} << p); ++zeros) {
      Label l;
      l.zeros = zeros;
      if (p < r) l.ones = std::uint64_t{1} << p;
      labels.push_back(l);
    }
  }
  VectorLabeling lab{r, std::move(labels)};
  auto g = labeling_graph(lab);
  if (!g) throw Error("extremal labeling crosses twice; construction is broken");
  return {std::move(*g), std::move(lab)};
}

std::optional<SupportTriple> support_class_check(const VectorLabeling& l) {
  if (!labeling_graph(l)) throw InvalidArgument("labeling does not define a biclique partition");
  std::map<std::uint64_t, std::vector<Label>> classes;
  for (const auto& lab : l.labels) {
    if (lab.support() == 0) continue;
    auto& cls = classes[lab.support()];
    if (std::find(cls.begin(), cls.end(), lab) == cls.end()) cls.push_back(lab);
    if (cls.size() == 3) return SupportTriple{cls[0], cls[1], cls[2]};
  }
  return std::nullopt;
}

VerifyReport verify(const Graph& g, const VectorLabeling& l) {
  VerifyReport rep;
  if (l.labels.size() != g.size()) {
    rep.detail = "labeling has " + std::to_string(l.labels.size()) + " vectors for " + std::to_string(g.size()) +
                 " vertices";
    return rep;
  }
  rep.vertex_count_ok = l.r < 63 && g.size() == (std::uint64_t{2} << l.r) - 1;
  rep.twin_free = is_twin_free(g);
  auto decoded = decode_labeling(g, l);
  if (auto* p = std::get_if<BicliquePartition>(&decoded)) {
    rep.partition_ok = p->size() <= l.r;
    rep.blocks = p->size();
  } else {
    rep.detail = std::get<Violation>(decoded).describe();
  }
  if (rep.partition_ok) {
    auto triple = support_class_check(l);
    rep.support_classes_ok = !triple;
    if (triple) {
      rep.detail = "support class holds " + label_to_string((*triple)[0], l.r) + ", " +
                   label_to_string((*triple)[1], l.r) + ", " + label_to_string((*triple)[2], l.r);
    }
  }
  if (rep.detail.empty() && !rep.vertex_count_ok) rep.detail = "vertex count is not 2^(r+1)-1";
  if (rep.detail.empty() && !rep.twin_free) rep.detail = "graph has twins";
  return rep;
}

namespace {

// Include/exclude search over all 3^r vectors. A chosen set must be pairwise compatible
// (no pair crosses in two coordinates) and hold at most two vectors per nonempty support.
class OrderSearch {
 public:
  OrderSearch(unsigned r, bool support_lemma) : r_(r), support_lemma_(support_lemma) {
    std::vector<Label> all{Label{}};
    for (unsigned i = 0; i < r; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      std::vector<Label> next;
      for (const auto& c : all) {
        next.push_back(c);
        next.push_back({c.ones | bit, c.zeros});
        next.push_back({c.ones, c.zeros | bit});
      }
      all.swap(next);
    }
    // Order by support so that each support class is contiguous.
    std::stable_sort(all.begin(), all.end(), [](const Label& a, const Label& b) { return a.support() < b.support(); });
    vectors_ = std::move(all);
    // Remaining capacity after position i: sum over later classes of min(2, size), all-2 counts once.
    suffix_cap_.assign(vectors_.size() + 1, 0);
    for (std::size_t i = vectors_.size(); i-- > 0;) {
      const std::uint64_t sup = vectors_[i].support();
      std::size_t same_after = 0;
      for (std::size_t j = i + 1; j < vectors_.size() && vectors_[j].support() == sup; ++j) ++same_after;
      const std::size_t cap = sup == 0 ? 1 : (support_lemma ? 2 : ~std::size_t{0});
      suffix_cap_[i] = suffix_cap_[i + 1] + (same_after < cap ? 1 : 0);
    }
  }

  std::size_t upper_bound() const { return suffix_cap_[0]; }

  bool search_size(std::size_t target) {
    target_ = target;
    chosen_.clear();
    return step(0);
  }

  const std::vector<Label>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool step(std::size_t i) {
    ++nodes_;
    if (chosen_.size() == target_) return accept();
    if (i == vectors_.size() || chosen_.size() + suffix_cap_[i] < target_) return false;
    const Label& v = vectors_[i];
    std::size_t same_support = 0;
    bool compatible = true;
    for (const auto& c : chosen_) {
      if (c.support() == v.support()) ++same_support;
      if (crossing_count(c, v) > 1) compatible = false;
    }
    const std::size_t cap = v.support() == 0 ? 1 : (support_lemma_ ? 2 : ~std::size_t{0});
    if (compatible && same_support < cap) {
      chosen_.push_back(v);
      if (step(i + 1)) return true;
      chosen_.pop_back();
    }
    return step(i + 1);
  }

  bool accept() {
    VectorLabeling lab{r_, chosen_};
    auto g = labeling_graph(lab);
    if (!g || !is_twin_free(*g)) return false;
    // Re-validate the decoded partition independently of the compatibility pruning.
    auto decoded = decode_labeling(*g, lab);
    return std::holds_alternative<BicliquePartition>(decoded);
  }

  unsigned r_;
  bool support_lemma_;
  std::vector<Label> vectors_;
  std::vector<std::size_t> suffix_cap_;
  std::vector<Label> chosen_;
  std::size_t target_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MaxOrderResult max_twinfree_order(unsigned r, bool support_lemma) {
  if (r > kMaxExhaustiveDimension) {
    throw BudgetExceeded("exhaustive twin-free search limited to r <= " + std::to_string(kMaxExhaustiveDimension));
  }
  OrderSearch search(r, support_lemma);
  MaxOrderResult out;
  for (std::size_t target = search.upper_bound(); target > 0; --target) {
    if (search.search_size(target)) {
      out.order = target;
      out.witness = search.chosen();
      break;
    }
  }
  out.nodes = search.nodes();
  return out;
}

}  // namespace bcp::twinfree
