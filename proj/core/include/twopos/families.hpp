#pragma once

#include <string>
#include <vector>

#include "twopos/graph.hpp"

namespace twopos {

/// Two nested cliques with a staircase of cross edges (the base graph whose
/// clique blow-ups carry the whole classification).
Graph build_gn(int n);

/// Replaces vertex j of base with a clique of sizes[j] and joins two cliques
/// completely iff their base vertices are adjacent.
Graph lex_product(const Graph& base, const std::vector<int>& sizes);

/// Parameters naming B_k(n_1,...,n_k), the blow-up of the two-clique
/// staircase graph on k vertices.
struct BkSpec {
    int k = 0;
    std::vector<int> parts;

    int total() const;
    void validate() const;
    bool operator==(const BkSpec&) const = default;
};

Graph build_bk(const BkSpec& spec);

/// Textual form "B<k>(a_1,...,a_s;b_1,...,b_s)" or "B<k>(...;...;c)".
BkSpec parse_bk(const std::string& text);

/// Canonical display name: of the spec and its block-swapped twin, the one
/// whose first block is lexicographically >= the second.
std::string format_bk(const BkSpec& spec);

BkSpec block_swapped(const BkSpec& spec);

/// Quotient by the relation u ~ v, N(u)\{v} = N(v)\{u}: each class induces a
/// clique and the original graph is the clique blow-up of the quotient.
struct CanonicalDecomposition {
    Graph quotient;
    std::vector<int> multiplicities;
    std::vector<std::vector<VertexId>> classes;
};

CanonicalDecomposition canonical_graph(const Graph& g);

}  // namespace twopos
