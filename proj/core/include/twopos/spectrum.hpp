#pragma once

#include <vector>

#include "twopos/graph.hpp"

namespace twopos {

/// Adjacency eigenvalues sorted non-increasing, with the convergence bound
/// that produced them. The float path exists to reproduce decimal values;
/// all classification verdicts use exact inertia instead.
struct Spectrum {
    std::vector<double> values;
    double tolerance = 0.0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below tol.
Spectrum eigenvalues(const Graph& g, double tol = 1e-12);

}  // namespace twopos
