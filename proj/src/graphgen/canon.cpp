#include "rgd/graphgen/canon.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <numeric>

#include "rgd/graphgen/graph6.hpp"

namespace rgd {

namespace {

constexpr int kMax = Graph::kMaxVertices;
constexpr int kNoJump = INT_MAX;

using Perm = std::array<std::uint8_t, kMax>;

std::uint64_t bit(int u) { return std::uint64_t{1} << u; }

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

// Ordered partition of the vertex set. Cells are contiguous ranges of lab.
struct Partition {
  int n = 0;
  int cells = 0;
  Perm lab{};   // position -> vertex
  Perm end{};   // end[start] = one past the last position of the cell starting at start
  Perm cell{};  // vertex -> start of its cell

  static Partition unit(int n) {
    Partition p;
    p.n = n;
    p.cells = n > 0 ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      p.lab[i] = static_cast<std::uint8_t>(i);
      p.cell[i] = 0;
    }
    if (n > 0) p.end[0] = static_cast<std::uint8_t>(n);
    return p;
  }

  std::uint64_t mask(int start) const {
    std::uint64_t m = 0;
    for (int i = start; i < end[start]; ++i) m |= bit(lab[i]);
    return m;
  }

  bool discrete() const { return cells == n; }
};

// Refines p to the coarsest equitable partition finer than p, splitting by the cells in queue.
void refine(const Graph& g, Partition& p, std::vector<int> queue) {
  const int n = p.n;
  std::array<bool, kMax> queued{};
  for (int s : queue) queued[s] = true;
  std::array<int, kMax> count{};
  std::array<std::pair<int, int>, kMax> keyed{};
  for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
    const int w = queue[head];
    queued[w] = false;
    const std::uint64_t wmask = p.mask(w);
    for (int s = 0; s < n;) {
      const int e = p.end[s];
      if (e - s > 1) {
        bool differ = false;
        for (int i = s; i < e; ++i) {
          count[i] = std::popcount(g.row(p.lab[i]) & wmask);
          if (count[i] != count[s]) differ = true;
        }
        if (differ) {
          for (int i = s; i < e; ++i) keyed[i] = {count[i], p.lab[i]};
          std::sort(keyed.begin() + s, keyed.begin() + e);
          int start = s;
          for (int i = s; i < e; ++i) {
            if (i > s && keyed[i].first != keyed[i - 1].first) {
              p.end[start] = static_cast<std::uint8_t>(i);
              start = i;
              ++p.cells;
              if (!queued[start]) {
                queued[start] = true;
                queue.push_back(start);
              }
            }
            p.lab[i] = static_cast<std::uint8_t>(keyed[i].second);
            p.cell[keyed[i].second] = static_cast<std::uint8_t>(start);
          }
          p.end[start] = static_cast<std::uint8_t>(e);
          if (!queued[s]) {
            queued[s] = true;
            queue.push_back(s);
          }
        }
      }
      s = e;
    }
  }
}

// Isomorphism-invariant digest of a refined partition: cell sizes and the quotient matrix.
std::uint64_t node_invariant(const Graph& g, const Partition& p) {
  std::uint64_t h = mix(0, static_cast<std::uint64_t>(p.cells));
  std::array<std::uint64_t, kMax> masks{};
  std::array<int, kMax> starts{};
  int k = 0;
  for (int s = 0; s < p.n; s = p.end[s]) {
    starts[k] = s;
    masks[k++] = p.mask(s);
    h = mix(h, static_cast<std::uint64_t>(p.end[s] - s));
  }
  if (p.discrete()) return h;
  for (int a = 0; a < k; ++a) {
    const std::uint64_t row = g.row(p.lab[starts[a]]);
    for (int b = 0; b < k; ++b) h = mix(h, static_cast<std::uint64_t>(std::popcount(row & masks[b])));
  }
  return h;
}

void individualize(Partition& p, int u) {
  const int s = p.cell[u];
  const int e = p.end[s];
  int pos = s;
  while (p.lab[pos] != u) ++pos;
  std::swap(p.lab[s], p.lab[pos]);
  p.end[s] = static_cast<std::uint8_t>(s + 1);
  p.end[s + 1] = static_cast<std::uint8_t>(e);
  for (int i = s + 1; i < e; ++i) p.cell[p.lab[i]] = static_cast<std::uint8_t>(s + 1);
  ++p.cells;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition root = Partition::unit(n_);
    refine(g_, root, {0});
    explore(root, 0);
  }

  Canonical result() const {
    Canonical c;
    c.labeling.assign(best_lab_.begin(), best_lab_.begin() + n_);
    c.position.resize(n_);
    for (int i = 0; i < n_; ++i) c.position[c.labeling[i]] = i;
    for (const auto& gen : gens_) c.generators.emplace_back(gen.begin(), gen.begin() + n_);
    c.orbit = orbits(0);
    c.certificate = graph6::encode(g_.relabeled(c.position));
    return c;
  }

 private:
  // orbit[u] = smallest vertex in u's orbit under the generators fixing path_[0, depth).
  std::vector<int> orbits(int depth) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gen[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        int a = find_root(parent, u), b = find_root(parent, gen[u]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> out(n_);
    for (int u = 0; u < n_; ++u) out[u] = find_root(parent, u);
    return out;
  }

  static int compare_prefix(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<std::uint64_t> leaf_code(const Partition& p) const {
    std::vector<std::uint64_t> code(n_);
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t row = g_.row(p.lab[i]);
      std::uint64_t r = 0;
      for (int j = 0; j < n_; ++j) {
        if (row & bit(p.lab[j])) r |= bit(j);
      }
      code[i] = r;
    }
    return code;
  }

  // Records the automorphism mapping leaf p onto the stored leaf `target` and returns the depth
  // whose current child subtree is now known to be an image of an explored one.
  int automorphism(const Partition& p, const Perm& target, const std::vector<int>& target_path) {
    Perm gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[p.lab[i]] = target[i];
      if (p.lab[i] != target[i]) identity = false;
    }
    if (identity) return kNoJump;
    gens_.push_back(gamma);
    const std::size_t len = std::min(path_.size(), target_path.size());
    std::size_t c = 0;
    while (c < len && path_[c] == target_path[c]) ++c;
    if (c == len) return kNoJump;
    for (std::size_t i = 0; i <= c; ++i) {
      if (gamma[path_[i]] != target_path[i]) return kNoJump;
    }
    return static_cast<int>(c);
  }

  int leaf(const Partition& p) {
    auto code = leaf_code(p);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_inv_ = best_inv_ = inv_;
      first_path_ = best_path_ = path_;
      first_lab_ = best_lab_ = p.lab;
      return kNoJump;
    }
    if (code == first_code_) return automorphism(p, first_lab_, first_path_);
    int cmp = inv_ == best_inv_ ? 0 : (inv_ < best_inv_ ? -1 : 1);
    if (cmp == 0) cmp = code == best_code_ ? 0 : (code < best_code_ ? -1 : 1);
    if (cmp == 0) return automorphism(p, best_lab_, best_path_);
    if (cmp > 0) {
      best_code_ = std::move(code);
      best_inv_ = inv_;
      best_path_ = path_;
      best_lab_ = p.lab;
    }
    return kNoJump;
  }

  int explore(const Partition& p, int depth) {
    inv_.push_back(node_invariant(g_, p));
    int result = visit(p, depth);
    inv_.pop_back();
    return result;
  }

  int visit(const Partition& p, int depth) {
    if (have_first_) {
      const bool matches_first = first_inv_.size() >= inv_.size() && compare_prefix(inv_, first_inv_) == 0;
      if (!matches_first && compare_prefix(inv_, best_inv_) < 0) return kNoJump;
    }
    if (p.discrete()) return leaf(p);

    // Target: first smallest non-singleton cell.
    int target = -1, best_size = INT_MAX;
    for (int s = 0; s < n_; s = p.end[s]) {
      int size = p.end[s] - s;
      if (size > 1 && size < best_size) {
        best_size = size;
        target = s;
      }
    }
    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(members.begin(), members.end());

    std::vector<int> explored;
    std::size_t gens_seen = 0;
    std::vector<int> orbit;
    for (int u : members) {
      if (!explored.empty()) {
        if (gens_seen != gens_.size() || orbit.empty()) {
          orbit = orbits(depth);
          gens_seen = gens_.size();
        }
        bool equivalent = std::any_of(explored.begin(), explored.end(), [&](int x) { return orbit[x] == orbit[u]; });
        if (equivalent) continue;
      }
      Partition child = p;
      const int s = child.cell[u];
      individualize(child, u);
      refine(g_, child, {s});
      path_.push_back(u);
      int r = explore(child, depth + 1);
      path_.pop_back();
      explored.push_back(u);
      if (r < depth) return r;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> inv_;
  std::vector<int> path_;

  bool have_first_ = false;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<std::uint64_t> first_inv_, best_inv_;
  std::vector<int> first_path_, best_path_;
  Perm first_lab_{}, best_lab_{};
  std::vector<Perm> gens_;
};

}  // namespace

Canonical canonical_form(const Graph& g) {
  Search search(g);
  search.run();
  return search.result();
}

std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate; }

}  // namespace rgd
