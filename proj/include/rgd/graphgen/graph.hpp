#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rgd {

/// Simple undirected graph on at most 64 vertices, stored as bitset rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::uint64_t row(int u) const { return rows_[u]; }
  bool has_edge(int u, int w) const { return (rows_[u] >> w) & 1U; }
  int degree(int u) const { return std::popcount(rows_[u]); }
  int edge_count() const;

  void add_edge(int u, int w);
  void remove_edge(int u, int w);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  /// Every vertex has degree d.
  bool is_regular(int d) const;
  Graph complement() const;
  /// Image under the relabeling u -> perm[u].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// True iff a traversal from vertex 0 reaches every vertex. The empty graph is connected.
bool is_connected(const Graph& g);

/// Bitmask of the cut vertices (articulation points) of g.
std::uint64_t cut_vertices(const Graph& g);

/// "i: j k l" lines, one per vertex, 1-based.
std::string to_adjacency_list(const Graph& g);
Graph from_adjacency_list(const std::string& text);

}  // namespace rgd
