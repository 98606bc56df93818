#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgd/designs/design.hpp"

namespace rgd {

/// Required concurrences (off-diagonal) and replications of a design.
struct ConcurrenceTarget {
  int v = 0;
  std::vector<std::vector<int>> pair;  // symmetric, zero diagonal
  std::vector<int> point;

  static ConcurrenceTarget uniform(int v, int lambda, int r);
  /// lambda + T_ij off the diagonal, replication r.
  static ConcurrenceTarget from_graph(const Graph& t, int lambda, int r);
};

enum class SearchStatus { Found, None, Undecided };

const char* to_string(SearchStatus s);

struct RealizeResult {
  SearchStatus status = SearchStatus::None;
  std::optional<BlockDesign> design;
  std::uint64_t nodes = 0;
};

/// 0 means unlimited.
struct SearchBudget {
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for a binary design with b blocks of size k meeting the target.
/// Throws InvalidArgument when the target is internally inconsistent.
RealizeResult realize(const ConcurrenceTarget& target, int k, int b, SearchBudget budget = {});

/// Blocks {i, j} repeated lambda + T_ij times: every k = 2 target is realizable.
BlockDesign realize_pairs(const ConcurrenceTarget& target);

struct LambdaTildeResult {
  SearchStatus status = SearchStatus::None;  // None: nothing up to the cap
  int lambda = 0;                            // the minimal index when Found
  std::optional<BlockDesign> witness;
};

inline constexpr int kDefaultLambdaCap = 42;

/// Smallest lambda such that a 2-(v, k, lambda) design exists, trying indices that pass
/// the divisibility conditions up to cap.
LambdaTildeResult min_lambda_tilde(int v, int k, int cap = kDefaultLambdaCap, SearchBudget budget = {});

}  // namespace rgd
