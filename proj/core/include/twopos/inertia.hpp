#pragma once

#include <cstdint>
#include <vector>

#include "twopos/graph.hpp"

namespace twopos {

/// Exact eigenvalue sign counts: p positive, n negative, eta zero.
struct Inertia {
    int p = 0;
    int n = 0;
    int eta = 0;
    bool operator==(const Inertia&) const = default;
};

/// Exact inertia of an integer symmetric matrix via congruent symmetric
/// elimination over rationals. Arithmetic runs over reduced 128-bit
/// fractions and falls back to arbitrary-precision rationals on overflow,
/// so the result is always exact.
Inertia matrix_inertia(const std::vector<std::vector<std::int64_t>>& m);

/// Exact inertia of the adjacency matrix of g.
Inertia inertia(const Graph& g);

std::vector<std::vector<std::int64_t>> adjacency_matrix(const Graph& g);

}  // namespace twopos
