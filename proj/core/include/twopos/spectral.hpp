#pragma once

#include <optional>

#include "twopos/graph.hpp"
#include "twopos/inertia.hpp"
#include "twopos/spectrum.hpp"

namespace twopos {

struct PendantReduction {
    Graph reduced;
    VertexId pendant;
    VertexId support;
};

/// If g has a degree-1 vertex, removes the lowest-index pendant together
/// with its neighbor. Deletion drops p and n by one each and keeps eta.
std::optional<PendantReduction> pendant_reduce(const Graph& g);

/// Structural test for exactly one positive eigenvalue: the non-isolated
/// vertices must induce a complete multipartite graph.
bool is_one_positive(const Graph& g);

/// Part sizes of the complete multipartite graph induced by the non-isolated
/// vertices, or nullopt if that induced graph is not complete multipartite.
/// An edgeless graph yields an empty part list.
std::optional<std::vector<int>> multipartite_parts(const Graph& g);

}  // namespace twopos
