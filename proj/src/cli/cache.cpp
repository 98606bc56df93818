#include "rgd/cli/cache.hpp"

#include <boost/crc.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rgd/error.hpp"
#include "rgd/graphgen/enumerate.hpp"
#include "rgd/graphgen/graph6.hpp"

namespace rgd::cli {

namespace fs = std::filesystem;

namespace {

std::string checksum_line(const std::string& text, std::size_t count) {
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  char buf[64];
  std::snprintf(buf, sizeof buf, "crc32 %08x count %zu\n", static_cast<unsigned>(crc.checksum()), count);
  return buf;
}

std::optional<std::string> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_atomically(const fs::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text).flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

Cache::Cache(std::optional<fs::path> dir, int workers) : dir_(std::move(dir)), workers_(workers) {
  if (workers_ < 1) throw InvalidArgument("worker count must be at least 1");
  if (dir_) fs::create_directories(*dir_);
}

fs::path Cache::graphs_path(int v, int delta) const {
  return dir_.value_or(".") / ("v" + std::to_string(v) + "-d" + std::to_string(delta) + ".g6");
}

fs::path Cache::ranking_path(int v, int delta, Criterion criterion) const {
  return dir_.value_or(".") / ("v" + std::to_string(v) + "-d" + std::to_string(delta) + "-" +
                               std::string(1, to_char(criterion)) + ".rank");
}

std::optional<std::vector<RegularGraph>> Cache::load_graphs(int v, int delta) const {
  if (!dir_) return std::nullopt;
  auto path = graphs_path(v, delta);
  auto text = slurp(path);
  auto sum = slurp(path.string() + ".sum");
  if (!text || !sum) return std::nullopt;
  std::vector<RegularGraph> graphs;
  std::istringstream in(*text);
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (!line.empty()) graphs.emplace_back(graph6::decode(line));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (*sum != checksum_line(*text, graphs.size())) return std::nullopt;
  for (const auto& g : graphs) {
    if (g.order() != v || g.delta() != delta) return std::nullopt;
  }
  return graphs;
}

void Cache::store_graphs(int v, int delta, const std::vector<RegularGraph>& graphs) const {
  if (!dir_) return;
  std::string text;
  for (const auto& g : graphs) text += g.certificate() + "\n";
  auto path = graphs_path(v, delta);
  write_atomically(path, text);
  write_atomically(path.string() + ".sum", checksum_line(text, graphs.size()));
}

const std::vector<RegularGraph>& Cache::graphs(int v, int delta) {
  if (v == loaded_v_ && delta == loaded_delta_) return loaded_;
  if (auto cached = load_graphs(v, delta)) {
    loaded_ = std::move(*cached);
  } else {
    loaded_ = enumerate_regular(v, delta, EnumerateOptions{workers_});
    store_graphs(v, delta, loaded_);
  }
  loaded_v_ = v;
  loaded_delta_ = delta;
  return loaded_;
}

RankedFamily Cache::ranking(int v, int delta, Criterion criterion) {
  const auto path = ranking_path(v, delta, criterion);
  if (dir_) {
    auto cached = read_ranking(path);
    if (cached && cached->v == v && cached->delta == delta && cached->criterion == criterion) return *cached;
  }
  const RankingOptions options{workers_};
  RankedFamily family = rank_family(v, delta, make_candidates(graphs(v, delta), options), criterion, options);
  if (dir_) write_ranking(path, family);
  return family;
}

}  // namespace rgd::cli
