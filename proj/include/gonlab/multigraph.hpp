#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gonlab {

using Vertex = int;

/// One undirected edge bundle: `mult` parallel edges between u and v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t mult = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless undirected multigraph on vertices 0..n-1.
///
/// Vertices are 0-based internally; all text I/O (CLI, error messages)
/// renders them 1-based as v1..vn. Immutable once constructed.
class Multigraph {
public:
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    std::int64_t multiplicity(Vertex u, Vertex v) const;
    std::int64_t valence(Vertex v) const;
    /// Total number of edges, counting multiplicity.
    std::int64_t edge_count() const { return total_mult_; }

    /// Neighbors of v with multiplicities, ascending by vertex id.
    const std::vector<std::pair<Vertex, std::int64_t>>& neighbors(Vertex v) const;

    /// Canonical edge list: u < v, sorted ascending, multiplicities merged.
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_simple() const { return simple_; }

    /// Structural equality: same vertex count, same multiplicity on every pair.
    bool operator==(const Multigraph& other) const;
    bool operator!=(const Multigraph& other) const { return !(*this == other); }

private:
    int check(Vertex v) const;

    int n_ = 0;
    std::int64_t total_mult_ = 0;
    bool simple_ = true;
    std::vector<std::int64_t> mult_;  // flat n*n symmetric matrix
    std::vector<std::int64_t> valence_;
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> adjacency_;
    std::vector<Edge> edges_;
};

bool is_connected(const Multigraph& g);

/// True when the subgraph induced by `subset` is nonempty and connected.
bool subset_connected(const Multigraph& g, const std::vector<Vertex>& subset);

}  // namespace gonlab
