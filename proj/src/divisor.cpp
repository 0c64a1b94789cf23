#include "gonlab/divisor.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gonlab {

namespace {

void check_size(const Multigraph& g, size_t len, const char* what) {
    if (len != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(len) +
                                    " entries but the graph has " + std::to_string(g.vertex_count()) +
                                    " vertices");
}

void check_vertex(const Multigraph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex v" + std::to_string(v + 1) + " out of range");
}

}  // namespace

std::int64_t Divisor::degree() const {
    return std::accumulate(chips.begin(), chips.end(), std::int64_t{0});
}

bool Divisor::is_effective() const {
    for (std::int64_t c : chips)
        if (c < 0) return false;
    return true;
}

std::vector<Vertex> Divisor::support() const {
    std::vector<Vertex> out;
    for (size_t v = 0; v < chips.size(); ++v)
        if (chips[v] != 0) out.push_back(static_cast<Vertex>(v));
    return out;
}

Divisor fire_vertex(const Multigraph& g, const Divisor& d, Vertex v) {
    check_size(g, d.chips.size(), "divisor");
    check_vertex(g, v);
    Divisor out = d;
    out.chips[v] -= g.valence(v);
    for (const auto& [u, m] : g.neighbors(v)) out.chips[u] += m;
    return out;
}

Divisor fire_set(const Multigraph& g, const Divisor& d, const std::vector<Vertex>& s) {
    check_size(g, d.chips.size(), "divisor");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        check_vertex(g, v);
        in[v] = 1;
    }
    Divisor out = d;
    for (const Edge& e : g.edges()) {
        if (in[e.u] == in[e.v]) continue;  // internal or external edge moves nothing
        Vertex from = in[e.u] ? e.u : e.v;
        Vertex to = in[e.u] ? e.v : e.u;
        out.chips[from] -= e.mult;
        out.chips[to] += e.mult;
    }
    return out;
}

bool is_legal_set_firing(const Multigraph& g, const Divisor& d, const std::vector<Vertex>& s) {
    check_size(g, d.chips.size(), "divisor");
    if (!d.is_effective()) throw std::invalid_argument("legality check needs an effective divisor");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) {
        check_vertex(g, v);
        in[v] = 1;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        std::int64_t outdeg = 0;
        for (const auto& [u, m] : g.neighbors(v))
            if (!in[u]) outdeg += m;
        if (d.chips[v] < outdeg) return false;
    }
    return true;
}

Divisor apply_script(const Multigraph& g, const Divisor& d, const FiringScript& s) {
    check_size(g, d.chips.size(), "divisor");
    check_size(g, s.fires.size(), "script");
    Divisor out = d;
    for (const Edge& e : g.edges()) {
        // Each edge carries mult * (s(u) - s(v)) chips from u to v.
        std::int64_t flow = e.mult * (s.fires[e.u] - s.fires[e.v]);
        out.chips[e.u] -= flow;
        out.chips[e.v] += flow;
        assert(std::abs(out.chips[e.u]) < (std::int64_t{1} << 62));
        assert(std::abs(out.chips[e.v]) < (std::int64_t{1} << 62));
    }
    return out;
}

}  // namespace gonlab
