#include <doctest.h>

#include "oracles.hpp"
#include "rgd/designs/best.hpp"
#include "rgd/error.hpp"
#include "rgd/graphgen/canon.hpp"
#include "rgd/graphgen/enumerate.hpp"
#include "rgd/graphgen/graph6.hpp"

using namespace rgd;

namespace {

std::string fixture(const std::string& name) { return std::string(RGD_TEST_DATA_DIR) + "/designs/" + name; }

void check_meets(const BlockDesign& d, const ConcurrenceTarget& t) {
  const auto lam = d.concurrence();
  for (int i = 0; i < t.v; ++i) {
    CHECK(lam[i][i] == t.point[i]);
    for (int j = 0; j < t.v; ++j) {
      if (i != j) CHECK(lam[i][j] == t.pair[i][j]);
    }
  }
}

RankedFamily family(int v, int delta, Criterion c) {
  return rank_family(v, delta, make_candidates(enumerate_regular(v, delta)), c);
}

}  // namespace

TEST_CASE("design parameters") {
  const DesignParams a = params_for(14, 2, 5);
  CHECK(a.b == 35);
  CHECK(a.lambda == 0);
  CHECK(a.delta == 5);
  const DesignParams b = params_for(8, 4, 6);
  CHECK(b.b == 12);
  CHECK(b.lambda == 2);
  CHECK(b.delta == 4);
  const DesignParams c = params_for(6, 3, 4);
  CHECK(c.b == 8);
  CHECK(c.lambda == 1);
  CHECK(c.delta == 3);
  CHECK_THROWS_WITH_AS(params_for(5, 3, 1), "no equireplicate design possible", InvalidArgument);
  CHECK_THROWS_AS(params_for(5, 5, 1), InvalidArgument);
}

TEST_CASE("blocks files") {
  const BlockDesign d = parse_blocks("# comment\n1 2 4\n\n2 3 5  # trailing\n1 2 4\n", 0, 0);
  CHECK(d.v == 5);
  CHECK(d.k == 3);
  CHECK(d.block_count() == 3);
  CHECK(d.blocks[0] == Block{0, 1, 3});
  CHECK(parse_blocks(format_blocks(d, "again"), 5, 3).blocks == d.blocks);
  CHECK_THROWS_AS(parse_blocks("1 2 3\n1 2 3 4\n", 6, 3), ParseError);
  CHECK_THROWS_AS(parse_blocks("1 2 9\n", 6, 3), ParseError);
  CHECK_THROWS_AS(parse_blocks("1 x 3\n", 6, 3), ParseError);
  CHECK_THROWS_AS(parse_blocks("# nothing\n", 6, 3), ParseError);
}

TEST_CASE("cyclic development") {
  const BlockDesign fano = develop_cyclic(7, {{1, 2, 4}});
  CHECK(fano.block_count() == 7);
  const auto lam = fano.concurrence();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) CHECK(lam[i][j] == (i == j ? 3 : 1));
  }
  const BlockDesign plane = develop_cyclic(13, {{1, 2, 4, 10}});
  CHECK(plane.block_count() == 13);
  const RgdReport report = verify_rgd(plane);
  CHECK(report.is_rgd);
  CHECK(report.lambda == 1);
  CHECK(report.delta == 0);
  const BlockDesign hexagon = develop_cyclic(6, {{1, 2}});
  CHECK(hexagon.block_count() == 6);
  CHECK(verify_rgd(hexagon).t.is_regular(2));
  // (1,3,5) has a short orbit of length 2.
  CHECK(develop_cyclic(6, {{1, 2, 4}, {1, 3, 5}}).block_count() == 8);
  CHECK_THROWS_AS(develop_cyclic(6, {{1, 7}}), InvalidArgument);
}

TEST_CASE("verification reports") {
  const RgdReport one = verify_rgd(read_blocks(fixture("rgd_v7_k2_r4.txt"), 7, 2));
  CHECK(one.is_rgd);
  CHECK(one.lambda == 0);
  CHECK(one.delta == 4);
  CHECK(one.t.is_regular(4));
  CHECK(is_connected(one.t));

  const RgdReport repeats = verify_rgd(read_blocks(fixture("rgd_v14_k3_r15.txt"), 14, 3));
  CHECK(repeats.is_rgd);
  CHECK(repeats.replication == 15);
  CHECK(repeats.lambda == 2);
  CHECK(repeats.delta == 4);

  // Pair {1,2} three times with lambda = 0.
  const RgdReport heavy = verify_rgd(parse_blocks("1 2\n1 2\n1 2\n3 4\n3 4\n3 4\n1 3\n2 4\n1 4\n2 3\n", 4, 2));
  CHECK_FALSE(heavy.is_rgd);
  CHECK(heavy.failure.rfind("not an RGD", 0) == 0);

  const RgdReport uneven = verify_rgd(parse_blocks("1 2\n2 3\n", 3, 2));
  CHECK(uneven.replication == -1);
  CHECK(uneven.failure == "not equireplicate");

  const RgdReport repeated_point = verify_rgd(parse_blocks("1 1 2\n2 3 3\n", 3, 3));
  CHECK_FALSE(repeated_point.is_binary);

  const RgdReport disconnected = verify_rgd(parse_blocks("1 2\n1 2\n3 4\n3 4\n", 4, 2));
  CHECK_FALSE(disconnected.is_connected);
  CHECK_FALSE(disconnected.is_rgd);
}

TEST_CASE("realize small targets") {
  const auto fano_target = ConcurrenceTarget::uniform(7, 1, 3);
  const RealizeResult fano = realize(fano_target, 3, 7);
  REQUIRE(fano.status == SearchStatus::Found);
  check_meets(*fano.design, fano_target);
  CHECK(verify_rgd(*fano.design).is_rgd);

  Graph k33(6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  }
  const auto pairs = ConcurrenceTarget::from_graph(k33, 0, 3);
  const RealizeResult edges = realize(pairs, 2, 9);
  REQUIRE(edges.status == SearchStatus::Found);
  CHECK(edges.design->sorted().blocks == realize_pairs(pairs).sorted().blocks);

  // Nine cross pairs need nine 2+1 blocks but only eight blocks exist.
  const RealizeResult impossible = realize(ConcurrenceTarget::from_graph(k33, 1, 4), 3, 8);
  CHECK(impossible.status == SearchStatus::None);

  CHECK_THROWS_AS(realize(ConcurrenceTarget::uniform(5, 1, 2), 3, 3), InvalidArgument);
  CHECK_THROWS_AS(realize(fano_target, 3, 8), InvalidArgument);
}

TEST_CASE("Fano plane is unique up to isomorphism") {
  // Any 2-(7,3,1) design's block-intersection structure is the Fano incidence graph.
  const RealizeResult a = realize(ConcurrenceTarget::uniform(7, 1, 3), 3, 7);
  const BlockDesign b = develop_cyclic(7, {{1, 2, 4}});
  auto incidence = [](const BlockDesign& d) {
    Graph g(14);
    for (int i = 0; i < 7; ++i) {
      for (int p : d.blocks[i]) g.add_edge(i, 7 + p);
    }
    return g;
  };
  REQUIRE(a.status == SearchStatus::Found);
  CHECK(canonical_certificate(incidence(*a.design)) == canonical_certificate(incidence(b)));
}

TEST_CASE("node budget yields undecided") {
  const RealizeResult r = realize(ConcurrenceTarget::uniform(10, 2, 6), 4, 15, SearchBudget{3});
  CHECK(r.status == SearchStatus::Undecided);
  CHECK_FALSE(r.design.has_value());
  CHECK(r.nodes <= 3);
}

TEST_CASE("pair designs: fast path equals the generic search") {
  for (int v = 4; v <= 8; ++v) {
    for (int delta = 2; delta < v; ++delta) {
      for (const auto& g : enumerate_regular(v, delta)) {
        for (int lambda : {0, 1}) {
          const int r = lambda * (v - 1) + delta;
          const auto target = ConcurrenceTarget::from_graph(g.graph(), lambda, r);
          const RealizeResult generic = realize(target, 2, v * r / 2);
          REQUIRE(generic.status == SearchStatus::Found);
          CHECK(generic.design->sorted().blocks == realize_pairs(target).sorted().blocks);
        }
      }
    }
  }
}

TEST_CASE("minimal 2-design index") {
  CHECK(min_lambda_tilde(6, 2).lambda == 1);
  CHECK(min_lambda_tilde(6, 3).lambda == 2);
  CHECK(min_lambda_tilde(8, 3).lambda == 6);
  CHECK(min_lambda_tilde(9, 3).lambda == 1);
  const LambdaTildeResult seven = min_lambda_tilde(7, 5);
  REQUIRE(seven.status == SearchStatus::Found);
  CHECK(seven.lambda == 10);
  CHECK(seven.witness->block_count() == 21);
  CHECK(seven.witness->sorted().blocks.size() == 21);
  const auto sorted = seven.witness->sorted().blocks;
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  const LambdaTildeResult capped = min_lambda_tilde(8, 3, 5);
  CHECK(capped.status == SearchStatus::None);
  CHECK_FALSE(capped.witness.has_value());
  CHECK_THROWS_AS(min_lambda_tilde(5, 5), InvalidArgument);
}

TEST_CASE("complement of the Fano plane") {
  const BlockDesign fano = develop_cyclic(7, {{1, 2, 4}});
  BlockDesign complement{7, 4, {}};
  for (const auto& block : fano.blocks) {
    Block rest;
    for (int p = 0; p < 7; ++p) {
      if (std::find(block.begin(), block.end(), p) == block.end()) rest.push_back(p);
    }
    complement.blocks.push_back(rest);
  }
  // lambda' = 1 * (7-3)(7-3-1) / (3 * 2) = 2
  const auto lam = complement.concurrence();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) CHECK(lam[i][j] == (i == j ? 4 : 2));
  }
  CHECK(verify_rgd(complement).delta == 0);
}

TEST_CASE("best RGDs of small parameter sets") {
  const RankedFamily m63 = family(6, 3, Criterion::A);
  const BestRgdResult six = best_rgd(params_for(6, 3, 4), m63, 10);
  REQUIRE(six.status == SearchStatus::Found);
  // Rank 1 is K_{3,3}, which no k = 3 design realizes here.
  CHECK(six.rank == 2);
  CHECK(verify_rgd(*six.design).is_rgd);
  const Graph cyclic_t = verify_rgd(develop_cyclic(6, {{1, 2, 4}, {1, 3, 5}})).t;
  CHECK(canonical_certificate(cyclic_t) == six.certificate);

  const BestRgdResult capped = best_rgd(params_for(6, 3, 4), m63, 1);
  CHECK(capped.status == SearchStatus::None);

  const BestRgdResult eight = best_rgd(params_for(8, 4, 8), family(8, 3, Criterion::A), 10);
  REQUIRE(eight.status == SearchStatus::Found);
  CHECK(eight.rank == 1);
  const Graph eight_t = verify_rgd(develop_cyclic(8, {{1, 2, 3, 5}, {1, 2, 3, 6}})).t;
  CHECK(canonical_certificate(eight_t) == eight.certificate);
  const RgdReport report = verify_rgd(*eight.design);
  CHECK(report.lambda == 3);
  CHECK(report.delta == 3);

  const BestRgdResult pairs = best_rgd(params_for(6, 2, 3), m63, 10);
  REQUIRE(pairs.status == SearchStatus::Found);
  CHECK(pairs.rank == 1);
  CHECK(pairs.design->block_count() == 9);
  CHECK(oracle::isomorphic(verify_rgd(*pairs.design).t, graph6::decode(m63.entries[0].certificate)));

  CHECK_THROWS_AS(best_rgd(params_for(6, 2, 4), m63, 10), InvalidArgument);
  CHECK_THROWS_AS(best_rgd(params_for(7, 3, 3), m63, 10), InvalidArgument);
}

TEST_CASE("best RGD search reports undecided under a tight budget") {
  const BestRgdResult r = best_rgd(params_for(6, 3, 4), family(6, 3, Criterion::A), 10, SearchBudget{1});
  CHECK(r.status == SearchStatus::Undecided);
  CHECK(r.undecided_before >= 1);
}
