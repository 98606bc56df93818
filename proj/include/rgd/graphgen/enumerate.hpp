#pragma once

#include <cstdint>
#include <vector>

#include "rgd/graphgen/regular_graph.hpp"

namespace rgd {

struct EnumerateOptions {
  int workers = 1;
};

/// One representative per isomorphism class of connected delta-regular simple graphs
/// on v vertices, in ascending certificate order. Empty when v * delta is odd.
/// Requires v >= 3 and 1 <= delta <= v - 1.
std::vector<RegularGraph> enumerate_regular(int v, int delta, const EnumerateOptions& options = {});

}  // namespace rgd
