#include "rgd/graphgen/graph6.hpp"

#include <fstream>

#include "rgd/error.hpp"

namespace rgd::graph6 {

namespace {

constexpr char kBias = 63;

void encode_order(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

std::string encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_order(out, n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph decode(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  long n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > line.size()) throw ParseError("graph6: truncated order");
    long value = 0;
    for (int k = 0; k < count; ++k) value = (value << 6) | (line[pos++] - kBias);
    return value;
  };
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6: graphs above 64 vertices are not supported");
  const long bit_count = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bit_count + 5) / 6);
  if (line.size() != expected) throw ParseError("graph6: wrong length for order " + std::to_string(n));
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Graph> read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("graph6: cannot open " + path.string());
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(decode(line));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw Error("graph6: cannot write " + path.string());
  for (const auto& g : graphs) out << encode(g) << '\n';
}

}  // namespace rgd::graph6
