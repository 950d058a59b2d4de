#include "twopos/spectral.hpp"

#include <bit>

namespace twopos {

std::optional<PendantReduction> pendant_reduce(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 1) continue;
        int u = std::countr_zero(g.neighbors(v));
        std::uint64_t keep = g.vertex_mask() &
                             ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
        return PendantReduction{induced_subgraph(g, keep), v, u};
    }
    return std::nullopt;
}

std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
    // non-isolated vertices
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) verts.push_back(v);
    // complete multipartite iff every non-adjacent pair has identical
    // neighborhoods; parts are the classes of that relation
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            if (!g.adjacent(u, v) && g.neighbors(u) != g.neighbors(v))
                return std::nullopt;
        }
    std::vector<int> parts;
    std::uint64_t assigned = 0;
    for (int u : verts) {
        if ((assigned >> u) & 1u) continue;
        int size = 0;
        for (int v : verts)
            if (g.neighbors(v) == g.neighbors(u)) {
                ++size;
                assigned |= std::uint64_t{1} << v;
            }
        parts.push_back(size);
    }
    return parts;
}

bool is_one_positive(const Graph& g) {
    if (g.edge_count() == 0) return false;  // p = 0
    return multipartite_parts(g).has_value();
}

}  // namespace twopos
