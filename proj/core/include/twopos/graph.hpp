#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twopos {

using VertexId = int;

/// Simple undirected graph on at most 64 vertices.
/// Adjacency is stored as one 64-bit neighbor mask per vertex;
/// the structure is immutable once built through the named constructors.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    std::uint64_t neighbors(VertexId v) const { return adj_[v]; }
    bool adjacent(VertexId u, VertexId v) const {
        return (adj_[u] >> v) & 1u;
    }
    int degree(VertexId v) const;
    int edge_count() const;
    std::uint64_t vertex_mask() const {
        return order_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order_) - 1);
    }

    void add_edge(VertexId u, VertexId v);

    bool is_connected() const;
    bool operator==(const Graph& other) const = default;

    /// Checks symmetry, irreflexivity and bit range; throws on violation.
    void check_invariants() const;

private:
    int order_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complete_multipartite(const std::vector<int>& parts);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);
Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask);
Graph permuted(const Graph& g, const std::vector<int>& perm);

}  // namespace twopos
