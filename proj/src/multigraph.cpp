#include "gonlab/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gonlab {

namespace {
constexpr int kMaxVertices = 4096;  // keeps the n*n multiplicity matrix sane

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

Multigraph::Multigraph(int vertex_count) : Multigraph(vertex_count, {}) {}

Multigraph::Multigraph(int vertex_count, const std::vector<Edge>& edge_list) : n_(vertex_count) {
    if (n_ < 1) bad("multigraph needs at least one vertex");
    if (n_ > kMaxVertices) bad("multigraph too large (limit " + std::to_string(kMaxVertices) + " vertices)");
    mult_.assign(static_cast<size_t>(n_) * n_, 0);
    valence_.assign(n_, 0);
    for (const Edge& e : edge_list) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            bad("edge endpoint out of range: v" + std::to_string(e.u + 1) + " v" + std::to_string(e.v + 1));
        if (e.u == e.v) bad("self-loop at v" + std::to_string(e.u + 1) + " not allowed");
        if (e.mult < 1) bad("edge multiplicity must be positive");
        mult_[static_cast<size_t>(e.u) * n_ + e.v] += e.mult;
        mult_[static_cast<size_t>(e.v) * n_ + e.u] += e.mult;
    }
    adjacency_.assign(n_, {});
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            std::int64_t m = mult_[static_cast<size_t>(u) * n_ + v];
            if (m == 0) continue;
            adjacency_[u].push_back({v, m});
            valence_[u] += m;
            if (u < v) {
                edges_.push_back({u, v, m});
                total_mult_ += m;
                if (m > 1) simple_ = false;
            }
        }
    }
}

int Multigraph::check(Vertex v) const {
    if (v < 0 || v >= n_) bad("vertex v" + std::to_string(v + 1) + " out of range");
    return v;
}

std::int64_t Multigraph::multiplicity(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return mult_[static_cast<size_t>(u) * n_ + v];
}

std::int64_t Multigraph::valence(Vertex v) const { return valence_[check(v)]; }

const std::vector<std::pair<Vertex, std::int64_t>>& Multigraph::neighbors(Vertex v) const {
    return adjacency_[check(v)];
}

bool Multigraph::operator==(const Multigraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

bool is_connected(const Multigraph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return subset_connected(g, all);
}

bool subset_connected(const Multigraph& g, const std::vector<Vertex>& subset) {
    if (subset.empty()) return false;
    std::vector<char> inside(g.vertex_count(), 0);
    for (Vertex v : subset) inside[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack{subset[0]};
    seen[subset[0]] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const auto& [v, m] : g.neighbors(u)) {
            (void)m;
            if (inside[v] && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    // subset may list a vertex twice; count distinct
    size_t distinct = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (inside[v]) ++distinct;
    return reached == distinct;
}

}  // namespace gonlab
