#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rgd/cli/app.hpp"
#include "rgd/designs/design.hpp"
#include "rgd/graphgen/graph6.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rgd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RGD_TEST_DATA_DIR) + "/designs/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "6", "3"}).out == "2 graphs\n");
  CHECK(run({"enumerate", "5", "3"}).out == "0 graphs\n");
  CHECK(run({"enumerate", "7", "2"}).out == "1 graph\n");
  CHECK(run({"--format", "tsv", "enumerate", "10", "3"}).out == "v\tdelta\tgraphs\n10\t3\t19\n");
  CHECK(run({"enumerate", "6", "3", "--format", "tsv"}).out == "v\tdelta\tgraphs\n6\t3\t2\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == rgd::cli::kExitUsage);
  CHECK(run({"enumerate", "6"}).code == rgd::cli::kExitUsage);
  CHECK(run({"rank", "6", "3", "--criterion", "e"}).code == rgd::cli::kExitUsage);
  CHECK(run({"enumerate", "6", "9"}).code == rgd::cli::kExitUsage);
  CHECK(run({"--workers", "0", "enumerate", "6", "3"}).code == rgd::cli::kExitUsage);
  CHECK(run({"--help"}).code == rgd::cli::kExitOk);
}

TEST_CASE("rank") {
  const Run a = run({"rank", "10", "7", "--criterion", "a"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "x0^A = 0"));
  const Run both = run({"--format", "tsv", "rank", "12", "4"});
  CHECK(contains(both.out, "12\t4\tA\t2\t1544\t"));
  CHECK(contains(both.out, "12\t4\tD\t2\t1544\t"));
  const Run none = run({"rank", "7", "3"});
  CHECK(none.code == rgd::cli::kExitNone);
}

TEST_CASE("cache files are reused and rebuilt when corrupt") {
  const auto dir = fresh_dir("rgd_cli_cache");
  const Run first = run({"--cache", dir.string(), "rank", "10", "5", "--criterion", "d"});
  REQUIRE(first.code == 0);
  const auto rank_file = dir / "v10-d5-d.rank";
  REQUIRE(fs::exists(rank_file));
  REQUIRE(fs::exists(dir / "v10-d5.g6"));
  REQUIRE(fs::exists(dir / "v10-d5.g6.sum"));
  const auto size = fs::file_size(rank_file);

  const Run again = run({"--cache", dir.string(), "rank", "10", "5", "--criterion", "d"});
  CHECK(again.out == first.out);

  fs::resize_file(rank_file, size / 2);
  fs::resize_file(dir / "v10-d5.g6", 20);
  const Run rebuilt = run({"--cache", dir.string(), "rank", "10", "5", "--criterion", "d"});
  CHECK(rebuilt.out == first.out);
  CHECK(fs::file_size(rank_file) == size);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const Run twelve = run({"verify", fixture("rgd_v14_k2_r5.txt"), "14", "2"});
  CHECK(twelve.code == 0);
  CHECK(twelve.out == "RGD: v=14 k=2 r=5 lambda=0 delta=5, connected\n");
  const Run last = run({"verify", fixture("rgd_v20_k2_r3.txt"), "20", "2"});
  CHECK(contains(last.out, "RGD: v=20 k=2 r=3 lambda=0 delta=3"));

  const auto bad = fs::temp_directory_path() / "rgd_cli_bad_blocks.txt";
  std::ofstream(bad) << "1 2 3\n1 2 3 4\n";
  const Run parse = run({"verify", bad.string(), "6", "3"});
  CHECK(parse.code == rgd::cli::kExitUsage);
  CHECK(contains(parse.err, "line 2"));

  std::ofstream(bad) << "1 2\n1 2\n1 2\n3 4\n3 4\n3 4\n1 3\n2 4\n1 4\n2 3\n";
  const Run not_rgd = run({"verify", bad.string(), "4", "2"});
  CHECK(not_rgd.code == rgd::cli::kExitNone);
  CHECK(contains(not_rgd.out, "not an RGD"));
  fs::remove(bad);
}

TEST_CASE("values") {
  const Run twelve = run({"values", fixture("rgd_v14_k2_r5.txt"), "14", "2", "--x", "0", "--x", "5"});
  CHECK(contains(twelve.out, "D=1,627,920,000"));
  CHECK(contains(twelve.out, "vA~68.2334019"));
  CHECK(contains(twelve.out, "D=2,529,608,091,727,840,200,000,000"));
  CHECK(contains(twelve.out, "vA~1054.7827069"));

  const auto k5 = fs::temp_directory_path() / "rgd_cli_k5.txt";
  std::ofstream(k5) << "1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
  const Run complete = run({"values", k5.string(), "5", "2"});
  CHECK(complete.code == 0);
  CHECK(contains(complete.out, "A=5 ~ 5.0000000"));
  CHECK(contains(complete.out, "D=625"));
  fs::remove(k5);
}

TEST_CASE("best") {
  const Run pairs = run({"best", "6", "2", "3", "--criterion", "a"});
  CHECK(pairs.code == 0);
  CHECK(contains(pairs.out, "rank=1"));
  CHECK(contains(pairs.out, "rank_one=yes"));
  CHECK(contains(pairs.out, "1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n"));

  const Run triples = run({"best", "6", "3", "4", "--criterion", "d"});
  CHECK(triples.code == 0);
  CHECK(contains(triples.out, "rank=2"));
  CHECK(contains(triples.out, "rank_one=no"));
  CHECK(contains(triples.out, "lambda_tilde=2"));
  CHECK(contains(triples.out, "x=3"));

  const Run capped = run({"best", "6", "3", "4", "--max-rank", "1"});
  CHECK(capped.code == rgd::cli::kExitNone);
  CHECK(contains(capped.out, "none up to rank 1"));

  const Run tight = run({"--node-budget", "1", "best", "6", "3", "4", "--criterion", "a"});
  CHECK(tight.code == rgd::cli::kExitNone);
  CHECK(contains(tight.out, "undecided"));

  CHECK(run({"best", "6", "4", "5"}).code == rgd::cli::kExitUsage);
}

TEST_CASE("best over a graph file at a fixed offset") {
  // The two degree-5 graphs on 14 points: A prefers one at x = 0 and the other from x = 1 on.
  const auto graphs = fs::temp_directory_path() / "rgd_cli_v14.g6";
  {
    std::ofstream out(graphs);
    for (const char* name : {"rgd_v14_k2_r5.txt", "rgd_v14_k2_r5_alt.txt"}) {
      out << rgd::graph6::encode(rgd::verify_rgd(rgd::read_blocks(fixture(name), 14, 2)).t) << '\n';
    }
  }
  const Run a0 = run({"best", "14", "2", "5", "--criterion", "a", "--at-y", "0", "--graphs", graphs.string()});
  CHECK(a0.code == 0);
  CHECK(contains(a0.out, "order at x=0"));
  CHECK(contains(a0.out, "vA~68.2336883"));
  CHECK(contains(a0.out, "D=1,627,763,046"));

  const Run a_inf = run({"best", "14", "2", "5", "--criterion", "a", "--graphs", graphs.string()});
  CHECK(contains(a_inf.out, "vA~68.2334019"));
  const Run d0 = run({"best", "14", "2", "5", "--criterion", "d", "--at-y", "0", "--graphs", graphs.string()});
  CHECK(contains(d0.out, "D=1,627,920,000"));
  const Run d_inf = run({"best", "14", "2", "5", "--criterion", "d", "--graphs", graphs.string()});
  CHECK(contains(d_inf.out, "D=1,627,920,000"));
  fs::remove(graphs);
}

TEST_CASE("develop-cyclic and min-lambda") {
  const Run fano = run({"develop-cyclic", "7", "1,2,4", "--verify"});
  CHECK(fano.code == 0);
  CHECK(contains(fano.out, "1 2 4\n2 3 5\n"));
  CHECK(contains(fano.out, "lambda=1 delta=0"));
  CHECK(run({"develop-cyclic", "7", "1,x"}).code == rgd::cli::kExitUsage);

  CHECK(run({"min-lambda", "6", "3"}).out == "lambda_tilde=2 (b=10 r=5)\n");
  const Run capped = run({"min-lambda", "8", "3", "--cap", "5"});
  CHECK(capped.code == rgd::cli::kExitNone);
  CHECK(contains(capped.out, "unknown above cap 5"));
}

TEST_CASE("table") {
  const Run x0 = run({"--format", "tsv", "table", "--v-min", "9", "--v-max", "10"});
  CHECK(x0.out ==
        "v\tdelta\tgraphs\tx0_A\tx0_D\n"
        "9\t4\t16\t1\t1\n9\t6\t4\t0\t0\n"
        "10\t3\t19\t1\t1\n10\t4\t59\t1\t1\n10\t5\t60\t1\t1\n10\t6\t21\t1\t1\n10\t7\t5\t0\t0\n10\t8\t1\t0\t0\n");
  const Run designs =
      run({"--format", "tsv", "table", "--designs", "--v-min", "6", "--v-max", "6", "--k-max", "2", "--r-max", "9"});
  CHECK(designs.out ==
        "v\tk\tr\tlambda\tlambda_tilde\tdelta\tx0_A\tx0_D\n"
        "6\t2\t3\t0\t1\t3\t0\t0\n6\t2\t4\t0\t1\t4\t0\t0\n6\t2\t8\t1\t1\t3\t0\t0\n6\t2\t9\t1\t1\t4\t0\t0\n");
}
