#include "rgd/designs/best.hpp"

#include "rgd/error.hpp"
#include "rgd/graphgen/graph6.hpp"

namespace rgd {

BestRgdResult best_rgd(const DesignParams& params, const RankedFamily& family, int max_rank, SearchBudget budget) {
  if (params.delta == 0) throw InvalidArgument("delta = 0: the design is a BIBD, use min-lambda");
  if (family.v != params.v || family.delta != params.delta) {
    throw InvalidArgument("family M(" + std::to_string(family.v) + "," + std::to_string(family.delta) +
                          ") does not match v=" + std::to_string(params.v) + " delta=" + std::to_string(params.delta));
  }
  BestRgdResult result;
  for (const auto& entry : family.entries) {
    if (entry.rank > max_rank) break;
    const Graph t = graph6::decode(entry.certificate);
    const auto target = ConcurrenceTarget::from_graph(t, params.lambda, params.r);
    RealizeResult attempt;
    if (params.k == 2) {
      attempt.status = SearchStatus::Found;
      attempt.design = realize_pairs(target);
    } else {
      attempt = realize(target, params.k, params.b, budget);
    }
    if (attempt.status == SearchStatus::Undecided) {
      ++result.undecided_before;
      continue;
    }
    if (attempt.status == SearchStatus::None) continue;
    result.status = result.undecided_before == 0 ? SearchStatus::Found : SearchStatus::Undecided;
    result.design = std::move(attempt.design);
    result.certificate = entry.certificate;
    result.rank = entry.rank;
    result.tie_class = entry.tie_class;
    return result;
  }
  result.status = result.undecided_before == 0 ? SearchStatus::None : SearchStatus::Undecided;
  return result;
}

}  // namespace rgd
