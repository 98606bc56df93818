#include "rgd/graphgen/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rgd/error.hpp"

namespace rgd {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("Graph: order must be in [0, 64]");
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::add_edge(int u, int w) {
  if (u == w) throw InvalidArgument("Graph: loops are not allowed");
  rows_[u] |= std::uint64_t{1} << w;
  rows_[w] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int w) {
  rows_[u] &= ~(std::uint64_t{1} << w);
  rows_[w] &= ~(std::uint64_t{1} << u);
}

int Graph::add_vertex() {
  if (n_ == kMaxVertices) throw InvalidArgument("Graph: order must be in [0, 64]");
  rows_.push_back(0);
  return n_++;
}

bool Graph::is_regular(int d) const {
  return std::all_of(rows_.begin(), rows_.end(), [d](std::uint64_t r) { return std::popcount(r) == d; });
}

Graph Graph::complement() const {
  Graph c(n_);
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (int u = 0; u < n_; ++u) c.rows_[u] = ~rows_[u] & all & ~(std::uint64_t{1} << u);
  return c;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph out(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t r = rows_[u];
    while (r) {
      int w = std::countr_zero(r);
      r &= r - 1;
      out.rows_[perm[u]] |= std::uint64_t{1} << perm[w];
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.row(u);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

std::uint64_t cut_vertices(const Graph& g) {
  const int n = g.order();
  std::uint64_t cuts = 0;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  int timer = 0;
  // Iterative Tarjan: stack of (vertex, remaining neighbor mask).
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<std::pair<int, std::uint64_t>> stack{{root, g.row(root)}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      auto& [u, rest] = stack.back();
      if (rest) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          if (u == root) ++root_children;
          stack.emplace_back(w, g.row(w));
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        int done = u;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[done]);
          if (p != root && low[done] >= disc[p]) cuts |= std::uint64_t{1} << p;
        }
      }
    }
    if (root_children > 1) cuts |= std::uint64_t{1} << root;
  }
  return cuts;
}

std::string to_adjacency_list(const Graph& g) {
  std::ostringstream os;
  for (int u = 0; u < g.order(); ++u) {
    os << (u + 1) << ":";
    for (int w = 0; w < g.order(); ++w) {
      if (g.has_edge(u, w)) os << ' ' << (w + 1);
    }
    os << '\n';
  }
  return os.str();
}

Graph from_adjacency_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, std::vector<int>>> rows;
  int max_index = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("adjacency list: missing ':' in line '" + line + "'");
    int u = 0;
    try {
      u = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("adjacency list: bad vertex label in line '" + line + "'");
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<int> nbrs;
    std::string tok;
    while (rest >> tok) {
      try {
        std::size_t used = 0;
        int w = std::stoi(tok, &used);
        if (used != tok.size()) throw ParseError("");
        nbrs.push_back(w);
        max_index = std::max(max_index, w);
      } catch (const std::exception&) {
        throw ParseError("adjacency list: bad neighbor '" + tok + "'");
      }
    }
    max_index = std::max(max_index, u);
    rows.emplace_back(u, std::move(nbrs));
  }
  if (max_index > Graph::kMaxVertices) throw ParseError("adjacency list: more than 64 vertices");
  Graph g(max_index);
  for (const auto& [u, nbrs] : rows) {
    for (int w : nbrs) {
      if (u < 1 || w < 1 || u == w) throw ParseError("adjacency list: invalid edge");
      g.add_edge(u - 1, w - 1);
    }
  }
  for (const auto& [u, nbrs] : rows) {
    if (static_cast<int>(nbrs.size()) != g.degree(u - 1)) {
      throw ParseError("adjacency list: neighbor lists are not symmetric");
    }
  }
  return g;
}

}  // namespace rgd
