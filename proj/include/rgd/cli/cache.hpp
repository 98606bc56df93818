#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "rgd/graphgen/regular_graph.hpp"
#include "rgd/ranking/ranking.hpp"

namespace rgd::cli {

/// Graph families and rankings, persisted under an optional directory.
/// Layout: v{v}-d{delta}.g6 (+ .g6.sum checksum sidecar) and v{v}-d{delta}-{a|d}.rank.
/// Files failing their checksum are recomputed and rewritten.
class Cache {
 public:
  Cache(std::optional<std::filesystem::path> dir, int workers);

  const std::vector<RegularGraph>& graphs(int v, int delta);
  RankedFamily ranking(int v, int delta, Criterion criterion);

  std::filesystem::path graphs_path(int v, int delta) const;
  std::filesystem::path ranking_path(int v, int delta, Criterion criterion) const;

 private:
  std::optional<std::vector<RegularGraph>> load_graphs(int v, int delta) const;
  void store_graphs(int v, int delta, const std::vector<RegularGraph>& graphs) const;

  std::optional<std::filesystem::path> dir_;
  int workers_;
  int loaded_v_ = -1;
  int loaded_delta_ = -1;
  std::vector<RegularGraph> loaded_;
};

}  // namespace rgd::cli
