#include "rgd/designs/realize.hpp"

#include <algorithm>
#include <numeric>

#include "rgd/error.hpp"

namespace rgd {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Undecided: return "undecided";
  }
  return "?";
}

ConcurrenceTarget ConcurrenceTarget::uniform(int v, int lambda, int r) {
  ConcurrenceTarget t;
  t.v = v;
  t.pair.assign(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), lambda));
  for (int i = 0; i < v; ++i) t.pair[i][i] = 0;
  t.point.assign(static_cast<std::size_t>(v), r);
  return t;
}

ConcurrenceTarget ConcurrenceTarget::from_graph(const Graph& t, int lambda, int r) {
  ConcurrenceTarget target = uniform(t.order(), lambda, r);
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j < t.order(); ++j) {
      if (t.has_edge(i, j)) ++target.pair[i][j];
    }
  }
  return target;
}

namespace {

void check_consistent(const ConcurrenceTarget& target, int k, int b) {
  const int v = target.v;
  if (k < 2 || k > v || b < 0) throw InvalidArgument("realize: need 2 <= k <= v and b >= 0");
  if (static_cast<int>(target.pair.size()) != v || static_cast<int>(target.point.size()) != v) {
    throw InvalidArgument("realize: target size does not match v");
  }
  long long point_total = 0;
  long long pair_total = 0;
  for (int i = 0; i < v; ++i) {
    if (static_cast<int>(target.pair[i].size()) != v) throw InvalidArgument("realize: target not square");
    if (target.pair[i][i] != 0) throw InvalidArgument("realize: nonzero diagonal in pair target");
    if (target.point[i] < 0) throw InvalidArgument("realize: negative replication");
    long long row = 0;
    for (int j = 0; j < v; ++j) {
      if (target.pair[i][j] < 0) throw InvalidArgument("realize: negative pair target");
      if (target.pair[i][j] != target.pair[j][i]) throw InvalidArgument("realize: pair target not symmetric");
      row += target.pair[i][j];
      if (j > i) pair_total += target.pair[i][j];
    }
    if (row != static_cast<long long>(target.point[i]) * (k - 1)) {
      throw InvalidArgument("realize: pair row " + std::to_string(i + 1) + " does not sum to r(k-1)");
    }
    point_total += target.point[i];
  }
  if (point_total != static_cast<long long>(b) * k) throw InvalidArgument("realize: replications do not sum to b k");
  if (pair_total != static_cast<long long>(b) * k * (k - 1) / 2) {
    throw InvalidArgument("realize: pair targets do not sum to b k(k-1)/2");
  }
}

bool is_uniform(const ConcurrenceTarget& target) {
  const int v = target.v;
  for (int i = 0; i < v; ++i) {
    if (target.point[i] != target.point[0]) return false;
    for (int j = 0; j < v; ++j) {
      if (i != j && target.pair[i][j] != target.pair[0][1]) return false;
    }
  }
  return true;
}

// Blocks are emitted in lexicographically nondecreasing order, each starting at the smallest
// point with residual replication; every design has exactly one such listing.
class Backtracker {
 public:
  Backtracker(const ConcurrenceTarget& target, int k, SearchBudget budget)
      : v_(target.v), k_(k), budget_(budget), rep_(target.point), pair_(static_cast<std::size_t>(v_ * v_)) {
    for (int i = 0; i < v_; ++i) {
      for (int j = 0; j < v_; ++j) pair_[idx(i, j)] = target.pair[i][j];
    }
  }

  SearchStatus run(bool fix_first_block) {
    if (fix_first_block && v_ >= k_) {
      Block first(static_cast<std::size_t>(k_));
      std::iota(first.begin(), first.end(), 0);
      if (!fits(first)) return SearchStatus::None;
      apply(first, -1);
      chosen_.push_back(first);
      if (feasible_after(first) && search()) return SearchStatus::Found;
      return exhausted_ ? SearchStatus::Undecided : SearchStatus::None;
    }
    if (search()) return SearchStatus::Found;
    return exhausted_ ? SearchStatus::Undecided : SearchStatus::None;
  }

  const std::vector<Block>& blocks() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * v_ + j); }

  bool fits(const Block& block) const {
    for (std::size_t a = 0; a < block.size(); ++a) {
      if (rep_[block[a]] <= 0) return false;
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        if (pair_[idx(block[a], block[b])] <= 0) return false;
      }
    }
    return true;
  }

  void apply(const Block& block, int step) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      rep_[block[a]] += step;
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        pair_[idx(block[a], block[b])] += step;
        pair_[idx(block[b], block[a])] += step;
      }
    }
  }

  // Each remaining block through x meets any q at most once.
  bool feasible_after(const Block& block) const {
    for (int x : block) {
      const int r = rep_[x];
      int partners = 0;
      for (int q = 0; q < v_; ++q) {
        const int need = pair_[idx(x, q)];
        if (need > r || need > rep_[q]) return false;
        if (need > 0) ++partners;
      }
      if (r > 0 && partners < k_ - 1) return false;
    }
    return true;
  }

  void extend(int p, std::vector<int>& partial, const std::vector<int>& pool, std::size_t from,
              std::vector<Block>& out) const {
    if (static_cast<int>(partial.size()) == k_) {
      out.push_back(partial);
      return;
    }
    const std::size_t still_needed = static_cast<std::size_t>(k_) - partial.size();
    for (std::size_t i = from; i + still_needed <= pool.size(); ++i) {
      const int q = pool[i];
      bool ok = true;
      for (std::size_t a = 1; a < partial.size() && ok; ++a) ok = pair_[idx(partial[a], q)] > 0;
      if (!ok) continue;
      partial.push_back(q);
      extend(p, partial, pool, i + 1, out);
      partial.pop_back();
    }
  }

  bool search() {
    if (budget_.nodes != 0 && nodes_ >= budget_.nodes) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    int p = 0;
    while (p < v_ && rep_[p] == 0) ++p;
    if (p == v_) return true;

    std::vector<int> pool;
    for (int q = p + 1; q < v_; ++q) {
      if (pair_[idx(p, q)] > 0 && rep_[q] > 0) pool.push_back(q);
    }
    std::vector<Block> options;
    std::vector<int> partial{p};
    extend(p, partial, pool, 0, options);

    const Block* last = chosen_.empty() ? nullptr : &chosen_.back();
    if (last != nullptr && last->front() == p) {
      options.erase(std::remove_if(options.begin(), options.end(), [&](const Block& b) { return b < *last; }),
                    options.end());
      // Prefer fresh blocks over repeating the previous one.
      if (!options.empty() && options.front() == *last) std::rotate(options.begin(), options.begin() + 1, options.end());
    }

    for (const auto& block : options) {
      apply(block, -1);
      chosen_.push_back(block);
      if (feasible_after(block) && search()) return true;
      chosen_.pop_back();
      apply(block, +1);
      if (exhausted_) return false;
    }
    return false;
  }

  int v_;
  int k_;
  SearchBudget budget_;
  std::vector<int> rep_;
  std::vector<int> pair_;
  std::vector<Block> chosen_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

RealizeResult realize(const ConcurrenceTarget& target, int k, int b, SearchBudget budget) {
  check_consistent(target, k, b);
  RealizeResult result;
  if (b == 0) {
    result.status = SearchStatus::Found;
    result.design = BlockDesign{target.v, k, {}};
    return result;
  }
  Backtracker search(target, k, budget);
  // In a uniform target any block can be relabelled to {0..k-1}, the lexicographic minimum.
  const bool fix_first = is_uniform(target) && target.pair[0][1] > 0;
  result.status = search.run(fix_first);
  result.nodes = search.nodes();
  if (result.status == SearchStatus::Found) result.design = BlockDesign{target.v, k, search.blocks()};
  return result;
}

BlockDesign realize_pairs(const ConcurrenceTarget& target) {
  BlockDesign design{target.v, 2, {}};
  for (int i = 0; i < target.v; ++i) {
    for (int j = i + 1; j < target.v; ++j) {
      for (int n = 0; n < target.pair[i][j]; ++n) design.blocks.push_back({i, j});
    }
  }
  return design;
}

LambdaTildeResult min_lambda_tilde(int v, int k, int cap, SearchBudget budget) {
  if (k < 2 || k >= v) throw InvalidArgument("min_lambda_tilde: need 2 <= k < v");
  LambdaTildeResult result;
  const long long pairs = static_cast<long long>(v) * (v - 1);
  for (int lambda = 1; lambda <= cap; ++lambda) {
    if ((static_cast<long long>(lambda) * (v - 1)) % (k - 1) != 0) continue;
    if ((lambda * pairs) % (static_cast<long long>(k) * (k - 1)) != 0) continue;
    const int r = lambda * (v - 1) / (k - 1);
    const int b = static_cast<int>(lambda * pairs / (static_cast<long long>(k) * (k - 1)));
    if (b < v) continue;  // Fisher's inequality
    auto attempt = k == 2 ? RealizeResult{SearchStatus::Found, realize_pairs(ConcurrenceTarget::uniform(v, lambda, r)), 0}
                          : realize(ConcurrenceTarget::uniform(v, lambda, r), k, b, budget);
    if (attempt.status == SearchStatus::None) continue;
    result.status = attempt.status;
    result.lambda = lambda;
    result.witness = std::move(attempt.design);
    return result;
  }
  result.status = SearchStatus::None;
  return result;
}

}  // namespace rgd
