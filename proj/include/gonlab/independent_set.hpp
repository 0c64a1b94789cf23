#pragma once

#include <cstdint>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

struct IndependentSetOptions {
    /// Hard guard; the solver packs vertex sets into 64-bit masks.
    int max_vertices = 64;
};

/// Exact independence number by branch and bound. Requires a simple graph
/// within the vertex guard.
std::int64_t independence_number(const Multigraph& g, const IndependentSetOptions& opts = {});

/// Lexicographically smallest maximum independent set (as a sorted vertex
/// list). Ties are broken by preferring the smallest vertex ids.
std::vector<Vertex> max_independent_set(const Multigraph& g, const IndependentSetOptions& opts = {});

}  // namespace gonlab
