#include "twopos/graph6.hpp"

#include <istream>

namespace twopos {

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6Error("character outside 63..126", i);
    }
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > Graph::kMaxOrder)
        throw Graph6Error("order exceeds 64 (long form unsupported)", 0);
    int bits = n * (n - 1) / 2;
    std::size_t need = 1 + (bits + 5) / 6;
    if (text.size() < need) throw Graph6Error("truncated bit section", text.size());
    if (text.size() > need) throw Graph6Error("trailing bytes", need);
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = 1 + bit / 6;
            int shift = 5 - bit % 6;
            if ((static_cast<unsigned char>(text[byte]) - 63) >> shift & 1)
                g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j))
                out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace twopos
