#pragma once

#include <cstdint>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

/// Chip count per vertex. A divisor does not know its graph; every
/// operation takes the graph explicitly and rejects length mismatches.
struct Divisor {
    std::vector<std::int64_t> chips;

    Divisor() = default;
    explicit Divisor(int n) : chips(n, 0) {}
    explicit Divisor(std::vector<std::int64_t> c) : chips(std::move(c)) {}

    std::int64_t degree() const;
    bool is_effective() const;
    /// Vertices carrying a nonzero chip count, ascending.
    std::vector<Vertex> support() const;

    std::int64_t& operator[](size_t v) { return chips[v]; }
    std::int64_t operator[](size_t v) const { return chips[v]; }
    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// How many times each vertex fires (negative entries borrow).
struct FiringScript {
    std::vector<std::int64_t> fires;

    FiringScript() = default;
    explicit FiringScript(int n) : fires(n, 0) {}

    friend bool operator==(const FiringScript&, const FiringScript&) = default;
};

/// v sends one chip along each incident edge.
Divisor fire_vertex(const Multigraph& g, const Divisor& d, Vertex v);

/// Every vertex of S fires once: v in S loses its out-degree to the
/// complement, u outside S gains its edge count into S.
Divisor fire_set(const Multigraph& g, const Divisor& d, const std::vector<Vertex>& s);

/// True when firing S keeps every vertex of S non-negative. Requires an
/// effective starting divisor.
bool is_legal_set_firing(const Multigraph& g, const Divisor& d, const std::vector<Vertex>& s);

/// D minus the Laplacian applied to the script.
Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& s);

}  // namespace gonlab
