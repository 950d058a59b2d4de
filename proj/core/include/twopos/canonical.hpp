#pragma once

#include <cstdint>
#include <vector>

#include "twopos/graph.hpp"

namespace twopos {

/// Order-prefixed, bit-packed upper triangle of the adjacency matrix under
/// the canonical vertex ordering. Equal bytes iff isomorphic graphs.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Lexicographically least order-prefixed upper-triangle bit string over all
/// vertex orderings. Branch-and-bound over orderings with prefix pruning and
/// twin-transposition symmetry pruning; deterministic.
CanonicalForm canonical_form(const Graph& g);

/// Reconstructs the canonically labeled graph from its form.
Graph from_canonical_form(const CanonicalForm& form);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace twopos
