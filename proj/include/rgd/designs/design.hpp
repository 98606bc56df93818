#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rgd/graphgen/graph.hpp"

namespace rgd {

/// Parameters of an equireplicate incomplete block design and its RGD offsets.
struct DesignParams {
  int v = 0;
  int k = 0;
  int r = 0;
  int b = 0;
  int lambda = 0;  // floor(r(k-1)/(v-1))
  int delta = 0;   // r(k-1) - lambda(v-1)
};

/// Throws InvalidArgument("no equireplicate design possible") when k does not divide v r,
/// and for k >= v or non-positive arguments.
DesignParams params_for(int v, int k, int r);

/// Points are 0-based internally; each block is sorted ascending.
using Block = std::vector<int>;

/// A multiset of k-subsets of {0..v-1}.
struct BlockDesign {
  int v = 0;
  int k = 0;
  std::vector<Block> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  /// Replication of each point.
  std::vector<int> replication() const;
  /// Off-diagonal: number of blocks containing both points. Diagonal: replication.
  std::vector<std::vector<int>> concurrence() const;
  /// Blocks sorted lexicographically; two designs with equal canonical block lists are identical.
  BlockDesign sorted() const;
};

/// Blocks file: one block per line, k space-separated 1-based points, '#' comments.
/// k = 0 infers the block size from the first block; v = 0 infers it from the largest point.
BlockDesign parse_blocks(const std::string& text, int v = 0, int k = 0);
BlockDesign read_blocks(const std::filesystem::path& path, int v = 0, int k = 0);
std::string format_blocks(const BlockDesign& design, const std::string& comment = {});

/// Union of the translation orbits {B + t mod v} of 1-based initial blocks; short orbits
/// contribute only their distinct translates.
BlockDesign develop_cyclic(int v, const std::vector<Block>& initial_blocks);

/// Outcome of checking whether a design is a connected regular graph design.
struct RgdReport {
  bool is_binary = false;
  bool is_connected = false;
  int replication = -1;  // -1 when unequal
  int lambda = 0;
  int delta = 0;
  Graph t;  // pairs occurring lambda + 1 times
  bool is_rgd = false;
  std::string failure;
};

RgdReport verify_rgd(const BlockDesign& design);

}  // namespace rgd
