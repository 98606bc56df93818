#pragma once

#include <string>

#include "rgd/designs/design.hpp"
#include "rgd/designs/realize.hpp"
#include "rgd/ranking/ranking.hpp"

namespace rgd {

struct BestRgdResult {
  /// Found only when every better-ranked graph was refuted; Undecided if some search hit the budget.
  SearchStatus status = SearchStatus::None;
  std::optional<BlockDesign> design;
  std::string certificate;
  int rank = 0;
  int tie_class = 0;
  /// Graphs whose realization search ran out of budget before the returned rank.
  int undecided_before = 0;
};

/// Walks the family in rank order (every member of a tie class included) and returns the
/// first graph T for which a design with concurrences lambda + T_ij exists.
BestRgdResult best_rgd(const DesignParams& params, const RankedFamily& family, int max_rank,
                       SearchBudget budget = {});

}  // namespace rgd
