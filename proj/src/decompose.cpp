#include "decompose.hpp"

#include "errors.hpp"

namespace bcp {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "stars") return Method::stars;
  if (name == "three-stage") return Method::three_stage;
  if (name == "fk") return Method::fk;
  return std::nullopt;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::stars: return "stars";
    case Method::three_stage: return "three-stage";
    case Method::fk: return "fk";
  }
  return "unknown";
}

DecomposeOutcome decompose(const Graph& g, Method method, const DecomposeOptions& options, const Seed& seed) {
  DecomposeOutcome out;
  out.method = method;
  out.alpha_witness = independent_set(g, VertexSet::full(g.size()), options.alpha_effort, seed.derive("alpha"));
  out.alpha_hat = out.alpha_witness.count();
  BicliquePartition stars = star_decomposition(g, out.alpha_witness);

  std::optional<BicliquePartition> own;
  switch (method) {
    case Method::stars:
      own = std::move(stars);
      break;
    case Method::three_stage:
      if (g.size() >= 4) {
        ThreeStageConfig cfg{options.alpha_effort};
        auto res = three_stage_decomposition(g, seed.derive("three-stage"), cfg);
        out.three_stage = res.report;
        own = std::move(res.partition);
      }
      break;
    case Method::fk:
      if (options.fk_params.k <= g.size()) {
        out.fk_witness = fk::find_induced_member(g, options.fk_params, seed.derive("fk"), options.fk_budget);
        if (out.fk_witness) own = fk::fk_decomposition(g, *out.fk_witness);
      }
      break;
  }

  if (method != Method::stars && (!own || own->size() > g.size() - out.alpha_hat)) {
    out.fell_back = true;
    own = star_decomposition(g, out.alpha_witness);
  }
  out.partition = std::move(*own);
  return out;
}

}  // namespace bcp
