#include "rgd/designs/design.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rgd/error.hpp"

namespace rgd {

DesignParams params_for(int v, int k, int r) {
  if (v < 3 || k < 2 || k >= v || r < 1) {
    throw InvalidArgument("need 2 <= k < v and r >= 1 (v=" + std::to_string(v) + " k=" + std::to_string(k) +
                          " r=" + std::to_string(r) + ")");
  }
  if ((v * r) % k != 0) throw InvalidArgument("no equireplicate design possible");
  DesignParams p;
  p.v = v;
  p.k = k;
  p.r = r;
  p.b = v * r / k;
  p.lambda = r * (k - 1) / (v - 1);
  p.delta = r * (k - 1) - p.lambda * (v - 1);
  return p;
}

std::vector<int> BlockDesign::replication() const {
  std::vector<int> rep(static_cast<std::size_t>(v), 0);
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i == 0 || block[i] != block[i - 1]) ++rep[static_cast<std::size_t>(block[i])];
    }
  }
  return rep;
}

std::vector<std::vector<int>> BlockDesign::concurrence() const {
  std::vector<std::vector<int>> lam(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
  for (const auto& block : blocks) {
    Block pts = block;
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (int a : pts) {
      for (int b : pts) ++lam[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  return lam;
}

BlockDesign BlockDesign::sorted() const {
  BlockDesign out = *this;
  for (auto& block : out.blocks) std::sort(block.begin(), block.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

BlockDesign parse_blocks(const std::string& text, int v, int k) {
  BlockDesign design;
  design.k = k;
  int max_point = 0;
  std::istringstream in(text);
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Block block;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      int point = 0;
      try {
        point = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError("line " + std::to_string(line_no) + ": bad point '" + token + "'");
      if (point < 1 || (v > 0 && point > v)) {
        throw ParseError("line " + std::to_string(line_no) + ": point " + token + " out of range");
      }
      max_point = std::max(max_point, point);
      block.push_back(point - 1);
    }
    if (block.empty()) continue;
    if (design.k == 0) design.k = static_cast<int>(block.size());
    if (static_cast<int>(block.size()) != design.k) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(design.k) +
                       " points, got " + std::to_string(block.size()));
    }
    std::sort(block.begin(), block.end());
    design.blocks.push_back(std::move(block));
  }
  if (design.blocks.empty()) throw ParseError("no blocks");
  design.v = v > 0 ? v : max_point;
  return design;
}

BlockDesign read_blocks(const std::filesystem::path& path, int v, int k) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_blocks(text.str(), v, k);
}

std::string format_blocks(const BlockDesign& design, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& block : design.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i] + 1;
    out << '\n';
  }
  return out.str();
}

BlockDesign develop_cyclic(int v, const std::vector<Block>& initial_blocks) {
  if (v < 1) throw InvalidArgument("v must be positive");
  BlockDesign design;
  design.v = v;
  for (const auto& initial : initial_blocks) {
    Block base;
    for (int p : initial) {
      if (p < 1 || p > v) throw InvalidArgument("initial block point " + std::to_string(p) + " outside 1.." + std::to_string(v));
      base.push_back(p - 1);
    }
    std::sort(base.begin(), base.end());
    if (design.k == 0) design.k = static_cast<int>(base.size());
    if (static_cast<int>(base.size()) != design.k) throw InvalidArgument("initial blocks differ in size");
    for (int t = 0; t < v; ++t) {
      Block shifted;
      for (int p : base) shifted.push_back((p + t) % v);
      std::sort(shifted.begin(), shifted.end());
      if (t > 0 && shifted == base) break;  // short orbit: translates repeat from here on
      design.blocks.push_back(std::move(shifted));
    }
  }
  return design;
}

RgdReport verify_rgd(const BlockDesign& design) {
  RgdReport report;
  const int v = design.v;
  report.t = Graph(v);

  report.is_binary = std::all_of(design.blocks.begin(), design.blocks.end(), [&](const Block& block) {
    return static_cast<int>(block.size()) == design.k && std::adjacent_find(block.begin(), block.end()) == block.end();
  });

  const auto lam = design.concurrence();
  Graph concurrence_graph(v);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (lam[i][j] > 0) concurrence_graph.add_edge(i, j);
    }
  }
  report.is_connected = v > 0 && is_connected(concurrence_graph);

  const auto rep = design.replication();
  if (!rep.empty() && std::all_of(rep.begin(), rep.end(), [&](int r) { return r == rep.front(); })) {
    report.replication = rep.front();
  }

  if (!report.is_binary) {
    report.failure = "not binary";
    return report;
  }
  if (report.replication < 0) {
    report.failure = "not equireplicate";
    return report;
  }
  const int r = report.replication;
  const int k = design.k;
  report.lambda = r * (k - 1) / (v - 1);
  report.delta = r * (k - 1) - report.lambda * (v - 1);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (lam[i][j] == report.lambda + 1) {
        report.t.add_edge(i, j);
      } else if (lam[i][j] != report.lambda) {
        report.failure = "not an RGD: pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " occurs " +
                         std::to_string(lam[i][j]) + " times (lambda=" + std::to_string(report.lambda) + ")";
        return report;
      }
    }
  }
  if (!report.t.is_regular(report.delta)) {
    report.failure = "pairs at lambda+1 do not form a " + std::to_string(report.delta) + "-regular graph";
    return report;
  }
  if (!report.is_connected) {
    report.failure = "not connected";
    return report;
  }
  report.is_rgd = true;
  return report;
}

}  // namespace rgd
