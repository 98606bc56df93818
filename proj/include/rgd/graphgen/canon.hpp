#pragma once

#include <string>
#include <vector>

#include "rgd/graphgen/graph.hpp"

namespace rgd {

/// Canonical labeling of a graph together with generators of its automorphism group.
struct Canonical {
  /// labeling[i] is the vertex placed at canonical position i.
  std::vector<int> labeling;
  /// position[u] is the canonical position of vertex u.
  std::vector<int> position;
  /// Generators of Aut(g), each as a vertex permutation.
  std::vector<std::vector<int>> generators;
  /// orbit[u] is the smallest vertex in u's automorphism orbit.
  std::vector<int> orbit;
  /// graph6 encoding of the canonically relabeled graph.
  std::string certificate;
};

/// Partition refinement plus a search tree pruned by automorphisms and node invariants.
Canonical canonical_form(const Graph& g);

/// Byte string equal for two graphs exactly when they are isomorphic.
std::string canonical_certificate(const Graph& g);

}  // namespace rgd
