#include "rgd/graphgen/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_set>

#include "rgd/error.hpp"
#include "rgd/graphgen/canon.hpp"

namespace rgd {

namespace {

// Vertex-by-vertex canonical augmentation. Intermediate graphs on n vertices are connected,
// have maximum degree <= delta and can still be completed to a delta-regular graph on v
// vertices: every deficiency is at most v - n, the total deficiency fits the remaining
// vertices and the edges left among those vertices fit a simple graph. All of these
// conditions survive deleting any non-cut vertex, so the canonical parent of a valid graph
// is itself valid.
class Augmenter {
 public:
  Augmenter(int v, int delta) : v_(v), delta_(delta) {}

  void children(const Graph& g, const std::function<void(Graph, std::string)>& emit) const {
    const int n = g.order();
    const int remaining = v_ - n - 1;
    const int min_degree = delta_ - remaining;

    std::uint64_t forced = 0;
    std::vector<int> optional;
    int deficiency = 0;
    for (int u = 0; u < n; ++u) {
      const int d = g.degree(u);
      deficiency += delta_ - d;
      if (d >= delta_) continue;
      if (d < min_degree) {
        forced |= std::uint64_t{1} << u;
      } else {
        optional.push_back(u);
      }
    }
    const int forced_count = std::popcount(forced);
    int lo = std::max({1, forced_count, min_degree});
    // total deficiency after the step must fit the remaining vertices
    lo = std::max(lo, (deficiency + delta_ - remaining * delta_ + 1) / 2);
    int hi = std::min(delta_, forced_count + static_cast<int>(optional.size()));
    // edges left among the remaining vertices must fit a simple graph
    const int slack = remaining * (remaining - 1) - remaining * delta_ + deficiency + delta_;
    if (slack < 0) return;
    hi = std::min(hi, slack / 2);

    std::unordered_set<std::string> seen;
    for (int s = lo; s <= hi; ++s) {
      const int pick = s - forced_count;
      if (pick < 0 || pick > static_cast<int>(optional.size())) continue;
      std::vector<int> idx(pick);
      std::function<void(int, int, std::uint64_t)> choose = [&](int start, int k, std::uint64_t mask) {
        if (k == pick) {
          try_child(g, mask, seen, emit);
          return;
        }
        for (int i = start; i <= static_cast<int>(optional.size()) - (pick - k); ++i) {
          choose(i + 1, k + 1, mask | (std::uint64_t{1} << optional[i]));
        }
      };
      choose(0, 0, forced);
    }
  }

 private:
  void try_child(const Graph& g, std::uint64_t neighbors, std::unordered_set<std::string>& seen,
                 const std::function<void(Graph, std::string)>& emit) const {
    Graph child = g;
    const int w = child.add_vertex();
    for (std::uint64_t m = neighbors; m; m &= m - 1) child.add_edge(w, std::countr_zero(m));

    // Deletion candidates: non-cut vertices maximizing (degree, sum of neighbor degrees).
    const int n = child.order();
    const std::uint64_t cuts = cut_vertices(child);
    std::vector<int> score(n);
    int best = -1;
    for (int u = 0; u < n; ++u) {
      int sum = 0;
      for (std::uint64_t m = child.row(u); m; m &= m - 1) sum += child.degree(std::countr_zero(m));
      score[u] = child.degree(u) * 4096 + sum;
      if (!((cuts >> u) & 1U)) best = std::max(best, score[u]);
    }
    if (score[w] != best) return;

    Canonical canon = canonical_form(child);
    int chosen = -1;
    for (int u = 0; u < n; ++u) {
      if ((cuts >> u) & 1U || score[u] != best) continue;
      if (chosen < 0 || canon.position[u] > canon.position[chosen]) chosen = u;
    }
    if (canon.orbit[chosen] != canon.orbit[w]) return;
    if (!seen.insert(canon.certificate).second) return;
    emit(std::move(child), std::move(canon.certificate));
  }

  int v_;
  int delta_;
};

struct Found {
  std::string certificate;
  Graph graph;
};

void depth_first(const Augmenter& aug, const Graph& g, int v, std::vector<Found>& out) {
  aug.children(g, [&](Graph child, std::string cert) {
    if (child.order() == v) {
      out.push_back({std::move(cert), std::move(child)});
    } else {
      depth_first(aug, child, v, out);
    }
  });
}

}  // namespace

std::vector<RegularGraph> enumerate_regular(int v, int delta, const EnumerateOptions& options) {
  if (v < 3 || v > Graph::kMaxVertices) throw InvalidArgument("enumerate_regular: v must be in [3, 64]");
  if (delta < 1 || delta > v - 1) throw InvalidArgument("enumerate_regular: delta must be in [1, v-1]");
  if (options.workers < 1) throw InvalidArgument("enumerate_regular: workers must be >= 1");
  if ((v * delta) % 2 != 0) return {};

  const Augmenter aug(v, delta);
  std::vector<Found> found;

  // Breadth-first until there is enough independent work, then one subtree list per worker.
  std::vector<Graph> frontier{Graph(1)};
  const std::size_t wanted = options.workers > 1 ? 8 * static_cast<std::size_t>(options.workers) : 1;
  while (!frontier.empty() && frontier.size() < wanted && frontier.front().order() < v - 1) {
    std::vector<Graph> next;
    for (const auto& g : frontier) {
      aug.children(g, [&](Graph child, std::string) { next.push_back(std::move(child)); });
    }
    frontier = std::move(next);
  }

  if (options.workers == 1 || frontier.size() <= 1) {
    for (const auto& g : frontier) depth_first(aug, g, v, found);
  } else {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(options.workers), frontier.size());
    std::vector<std::vector<Found>> partial(workers);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < frontier.size(); i += workers) depth_first(aug, frontier[i], v, partial[t]);
      });
    }
    for (auto& th : threads) th.join();
    for (auto& part : partial) {
      for (auto& f : part) found.push_back(std::move(f));
    }
  }

  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.certificate < b.certificate; });
  std::vector<RegularGraph> out;
  out.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && found[i].certificate == found[i - 1].certificate) {
      throw InternalError("enumerate_regular: duplicate isomorphism class emitted");
    }
    if (!found[i].graph.is_regular(delta)) throw InternalError("enumerate_regular: non-regular graph emitted");
    out.emplace_back(std::move(found[i].graph));
  }
  return out;
}

}  // namespace rgd
