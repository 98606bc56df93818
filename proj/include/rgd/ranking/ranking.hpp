#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgd/criteria/criteria.hpp"

namespace rgd {

/// A graph to be ranked: its certificate (graph6 of the canonical form) and SymVector.
struct Candidate {
  std::string certificate;
  SymVector sym;
};

struct RankedEntry {
  int rank = 0;        // 1 + number of strictly better entries
  int tie_class = 0;   // 1-based; equal SymVectors share a class
  std::string certificate;
  SymVector sym;
};

/// Totally ordered family M(v, delta) under one criterion.
struct RankedFamily {
  int v = 0;
  int delta = 0;
  Criterion criterion = Criterion::A;
  std::vector<RankedEntry> entries;
  /// Certified stabilization point: the order is constant on [x0, infinity).
  BigInt x0 = 0;
  /// For adjacent pair (i, i+1): the least integer m with P >= 0 on [m, inf); nullopt for ties.
  /// Empty when the family was loaded from a cache file.
  std::vector<std::optional<BigInt>> pair_witnesses;
  /// Set when the family is ordered at one fixed offset instead of at infinity.
  std::optional<BigInt> evaluated_at;
};

struct RankingOptions {
  int workers = 1;
};

std::vector<Candidate> make_candidates(const std::vector<RegularGraph>& graphs, const RankingOptions& options = {});

/// Orders candidates so that each criterion value eventually exceeds the next one's.
/// Ties (identical SymVectors) are grouped and ordered by certificate. Ranks and tie
/// classes are filled in; x0 and witnesses are left empty.
RankedFamily order_at_infinity(std::vector<Candidate> candidates, Criterion criterion);

/// Fills x0 and pair_witnesses of an order produced by order_at_infinity.
void certify_stabilization(RankedFamily& family, const RankingOptions& options = {});

/// order_at_infinity followed by certify_stabilization.
RankedFamily rank_family(int v, int delta, std::vector<Candidate> candidates, Criterion criterion,
                         const RankingOptions& options = {});

/// Orders candidates by their exact criterion value at the single offset x (descending).
RankedFamily order_at_point(std::vector<Candidate> candidates, Criterion criterion, const BigInt& x);

/// (rank, tie_class) of a certificate; throws InvalidArgument if absent.
std::pair<int, int> rank_of(const std::string& certificate, const RankedFamily& family);

/// Ranking cache file: header "v delta criterion x0 M", one "rank tie_class certificate
/// S1 .. S_{v-1}" line per entry, and a trailing "# crc32 XXXXXXXX" line.
std::string format_ranking(const RankedFamily& family);
void write_ranking(const std::filesystem::path& path, const RankedFamily& family);
/// nullopt when the file is missing, truncated or fails its checksum.
std::optional<RankedFamily> read_ranking(const std::filesystem::path& path);
std::optional<RankedFamily> parse_ranking(const std::string& text);

}  // namespace rgd
