#pragma once

#include <string>

#include "rgd/graphgen/graph.hpp"

namespace rgd {

/// A connected delta-regular simple graph with its canonical certificate.
class RegularGraph {
 public:
  /// Validates simplicity, regularity and connectivity; throws InvalidArgument otherwise.
  explicit RegularGraph(Graph g);

  int order() const { return graph_.order(); }
  int delta() const { return delta_; }
  const Graph& graph() const { return graph_; }
  const std::string& certificate() const { return certificate_; }

 private:
  Graph graph_;
  int delta_ = 0;
  std::string certificate_;
};

}  // namespace rgd
