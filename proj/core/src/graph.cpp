#include "twopos/graph.hpp"

#include <bit>
#include <numeric>

namespace twopos {

Graph::Graph(int order) : order_(order), adj_(order, 0) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, 64]");
}

int Graph::degree(VertexId v) const {
    return std::popcount(adj_[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("vertex out of range");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

void Graph::check_invariants() const {
    for (int v = 0; v < order_; ++v) {
        if (adj_[v] & ~vertex_mask())
            throw std::logic_error("adjacency bit beyond order");
        if ((adj_[v] >> v) & 1u)
            throw std::logic_error("self-loop present");
        for (int u = v + 1; u < order_; ++u)
            if (adjacent(v, u) != adjacent(u, v))
                throw std::logic_error("adjacency not symmetric");
    }
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("parts list must be non-empty");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("order exceeds 64");
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) g.add_edge(u, w);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxOrder) throw std::invalid_argument("union exceeds 64 vertices");
    Graph r(n);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) r.add_edge(u, v);
    int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.adjacent(u, v)) r.add_edge(off + u, off + v);
    return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::uint64_t mask = 0;
    for (VertexId v : keep) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
        mask |= std::uint64_t{1} << v;
    }
    return induced_subgraph(g, mask);
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask) {
    if (keep_mask & ~g.vertex_mask()) throw std::out_of_range("vertex out of range");
    // kept vertices are relabeled in ascending original order
    std::vector<int> verts;
    std::uint64_t m = keep_mask;
    while (m) {
        verts.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    Graph r(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                r.add_edge(static_cast<int>(i), static_cast<int>(j));
    return r;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph r(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) r.add_edge(perm[u], perm[v]);
    return r;
}

}  // namespace twopos
