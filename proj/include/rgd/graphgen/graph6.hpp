#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rgd/graphgen/graph.hpp"

namespace rgd::graph6 {

/// graph6 encoding of g (no trailing newline).
std::string encode(const Graph& g);
/// Decodes one graph6 line; an optional ">>graph6<<" header is accepted.
Graph decode(std::string_view line);

std::vector<Graph> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace rgd::graph6
