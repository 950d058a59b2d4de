#pragma once

#include <string>
#include <vector>

#include "twopos/graph.hpp"

namespace twopos {

struct Graph6Error : std::runtime_error {
    std::size_t byte_offset;
    Graph6Error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)),
          byte_offset(offset) {}
};

/// Short-form graph6: byte n+63, then upper-triangle bits column-major,
/// packed 6 per byte, each byte +63, zero-padded.
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

/// Newline-delimited multi-graph files.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace twopos
