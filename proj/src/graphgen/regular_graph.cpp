#include "rgd/graphgen/regular_graph.hpp"

#include "rgd/error.hpp"
#include "rgd/graphgen/canon.hpp"

namespace rgd {

RegularGraph::RegularGraph(Graph g) : graph_(std::move(g)) {
  if (graph_.order() == 0) throw InvalidArgument("RegularGraph: empty graph");
  delta_ = graph_.degree(0);
  if (!graph_.is_regular(delta_)) throw InvalidArgument("RegularGraph: graph is not regular");
  if (!is_connected(graph_)) throw InvalidArgument("RegularGraph: graph is not connected");
  certificate_ = canonical_certificate(graph_);
}

}  // namespace rgd
