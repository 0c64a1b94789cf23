#include "gonlab/scramble.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace gonlab {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Mask = std::uint64_t;

// Branch and bound for minimum hitting set over egg masks: always branch on
// a smallest unhit egg, trying each of its vertices.
struct HittingSolver {
    const std::vector<Mask>& eggs;
    std::int64_t best;

    explicit HittingSolver(const std::vector<Mask>& e)
        : eggs(e), best(static_cast<std::int64_t>(e.size())) {}

    void grow(Mask chosen, std::int64_t size) {
        if (size >= best) return;
        const Mask* pick = nullptr;
        int pick_bits = 65;
        for (const Mask& egg : eggs) {
            if (egg & chosen) continue;
            const int bits = std::popcount(egg);
            if (bits < pick_bits) {
                pick_bits = bits;
                pick = &egg;
            }
        }
        if (pick == nullptr) {
            best = size;
            return;
        }
        Mask rest = *pick;
        while (rest) {
            const Mask bit = rest & (~rest + 1);
            rest ^= bit;
            grow(chosen | bit, size + 1);
        }
    }
};

// Edmonds-Karp max flow; undirected edges become arc pairs with symmetric
// residual capacity.
struct FlowNet {
    struct Arc {
        int to;
        std::int64_t cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(static_cast<std::size_t>(n)) {}

    void add(int u, int v, std::int64_t cap, std::int64_t reverse_cap) {
        adj[static_cast<std::size_t>(u)].push_back({v, cap, static_cast<int>(adj[static_cast<std::size_t>(v)].size())});
        adj[static_cast<std::size_t>(v)].push_back({u, reverse_cap, static_cast<int>(adj[static_cast<std::size_t>(u)].size()) - 1});
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t total = 0;
        const int n = static_cast<int>(adj.size());
        std::vector<int> prev_node(static_cast<std::size_t>(n));
        std::vector<int> prev_arc(static_cast<std::size_t>(n));
        for (;;) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            prev_node[static_cast<std::size_t>(s)] = s;
            std::queue<int> bfs;
            bfs.push(s);
            while (!bfs.empty() && prev_node[static_cast<std::size_t>(t)] < 0) {
                const int u = bfs.front();
                bfs.pop();
                for (std::size_t i = 0; i < adj[static_cast<std::size_t>(u)].size(); ++i) {
                    const Arc& a = adj[static_cast<std::size_t>(u)][i];
                    if (a.cap <= 0 || prev_node[static_cast<std::size_t>(a.to)] >= 0) continue;
                    prev_node[static_cast<std::size_t>(a.to)] = u;
                    prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                    bfs.push(a.to);
                }
            }
            if (prev_node[static_cast<std::size_t>(t)] < 0) return total;
            std::int64_t push = kInf;
            for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
                const int u = prev_node[static_cast<std::size_t>(v)];
                push = std::min(push, adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])].cap);
            }
            for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
                const int u = prev_node[static_cast<std::size_t>(v)];
                Arc& a = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
                a.cap -= push;
                adj[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += push;
            }
            total += push;
        }
    }
};

std::vector<char> membership(const std::vector<Vertex>& egg, int n) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (Vertex v : egg) in[static_cast<std::size_t>(v)] = 1;
    return in;
}

// Edge cut separating two disjoint eggs: contract each egg to a terminal
// and run max flow with edge multiplicities as capacities.
std::int64_t edge_cut_between(const Multigraph& g, const std::vector<Vertex>& a,
                              const std::vector<Vertex>& b) {
    const int n = g.vertex_count();
    const auto in_a = membership(a, n);
    const auto in_b = membership(b, n);
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int next = 2;
    for (Vertex v = 0; v < n; ++v) {
        if (in_a[static_cast<std::size_t>(v)])
            id[static_cast<std::size_t>(v)] = 0;
        else if (in_b[static_cast<std::size_t>(v)])
            id[static_cast<std::size_t>(v)] = 1;
        else
            id[static_cast<std::size_t>(v)] = next++;
    }
    FlowNet net(next);
    for (const Edge& e : g.edges()) {
        const int u = id[static_cast<std::size_t>(e.u)];
        const int v = id[static_cast<std::size_t>(e.v)];
        if (u == v) continue;
        net.add(u, v, e.mult, e.mult);
    }
    return net.max_flow(0, 1);
}

// Vertex cut variant: split every vertex outside both eggs into an
// in/out pair of capacity one; edges get infinite capacity. Eggs joined
// directly by an edge cannot be separated.
std::optional<std::int64_t> vertex_cut_between(const Multigraph& g, const std::vector<Vertex>& a,
                                               const std::vector<Vertex>& b) {
    const int n = g.vertex_count();
    const auto in_a = membership(a, n);
    const auto in_b = membership(b, n);
    std::vector<int> enter(static_cast<std::size_t>(n));
    std::vector<int> leave(static_cast<std::size_t>(n));
    int next = 2;
    for (Vertex v = 0; v < n; ++v) {
        if (in_a[static_cast<std::size_t>(v)]) {
            enter[static_cast<std::size_t>(v)] = leave[static_cast<std::size_t>(v)] = 0;
        } else if (in_b[static_cast<std::size_t>(v)]) {
            enter[static_cast<std::size_t>(v)] = leave[static_cast<std::size_t>(v)] = 1;
        } else {
            enter[static_cast<std::size_t>(v)] = next++;
            leave[static_cast<std::size_t>(v)] = next++;
        }
    }
    for (const Edge& e : g.edges()) {
        const bool crosses = (in_a[static_cast<std::size_t>(e.u)] && in_b[static_cast<std::size_t>(e.v)]) ||
                             (in_b[static_cast<std::size_t>(e.u)] && in_a[static_cast<std::size_t>(e.v)]);
        if (crosses) return std::nullopt;  // adjacent eggs: no vertex set separates them
    }
    FlowNet net(next);
    for (Vertex v = 0; v < n; ++v)
        if (enter[static_cast<std::size_t>(v)] != leave[static_cast<std::size_t>(v)])
            net.add(enter[static_cast<std::size_t>(v)], leave[static_cast<std::size_t>(v)], 1, 0);
    for (const Edge& e : g.edges()) {
        const int from_u = leave[static_cast<std::size_t>(e.u)];
        const int into_v = enter[static_cast<std::size_t>(e.v)];
        const int from_v = leave[static_cast<std::size_t>(e.v)];
        const int into_u = enter[static_cast<std::size_t>(e.u)];
        if (from_u != into_v) net.add(from_u, into_v, kInf, 0);
        if (from_v != into_u) net.add(from_v, into_u, kInf, 0);
    }
    return net.max_flow(0, 1);
}

}  // namespace

Scramble::Scramble(const Multigraph& g, std::vector<std::vector<Vertex>> eggs)
    : eggs_(std::move(eggs)) {
    if (eggs_.empty()) throw std::invalid_argument("a scramble needs at least one egg");
    const int n = g.vertex_count();
    for (auto& egg : eggs_) {
        if (egg.empty()) throw std::invalid_argument("eggs must be non-empty");
        std::sort(egg.begin(), egg.end());
        egg.erase(std::unique(egg.begin(), egg.end()), egg.end());
        for (Vertex v : egg)
            if (v < 0 || v >= n)
                throw std::invalid_argument("egg vertex v" + std::to_string(v + 1) +
                                            " outside the graph");
        if (!subset_connected(g, egg))
            throw std::invalid_argument("each egg must induce a connected subgraph");
    }
}

std::int64_t hitting_number(const Multigraph& g, const Scramble& s, const ScrambleOptions& opts) {
    if (g.vertex_count() > opts.max_vertices || opts.max_vertices > 64)
        throw std::invalid_argument("hitting_number guard: too many vertices");
    if (static_cast<int>(s.eggs().size()) > opts.max_eggs)
        throw std::invalid_argument("hitting_number guard: too many eggs");
    std::vector<Mask> eggs;
    eggs.reserve(s.eggs().size());
    for (const auto& egg : s.eggs()) {
        Mask m = 0;
        for (Vertex v : egg) m |= Mask{1} << v;
        eggs.push_back(m);
    }
    HittingSolver solver(eggs);
    solver.grow(0, 0);
    return solver.best;
}

std::optional<std::int64_t> egg_cut_number(const Multigraph& g, const Scramble& s,
                                           const ScrambleOptions& opts) {
    std::optional<std::int64_t> best;
    const auto& eggs = s.eggs();
    for (std::size_t i = 0; i < eggs.size(); ++i) {
        for (std::size_t j = i + 1; j < eggs.size(); ++j) {
            std::vector<Vertex> overlap;
            std::set_intersection(eggs[i].begin(), eggs[i].end(), eggs[j].begin(), eggs[j].end(),
                                  std::back_inserter(overlap));
            if (!overlap.empty()) continue;
            std::optional<std::int64_t> cut;
            if (opts.vertex_cuts)
                cut = vertex_cut_between(g, eggs[i], eggs[j]);
            else
                cut = edge_cut_between(g, eggs[i], eggs[j]);
            if (cut && (!best || *cut < *best)) best = cut;
        }
    }
    return best;
}

std::int64_t scramble_order(const Multigraph& g, const Scramble& s, const ScrambleOptions& opts) {
    const std::int64_t h = hitting_number(g, s, opts);
    const auto e = egg_cut_number(g, s, opts);
    return e ? std::min(h, *e) : h;
}

}  // namespace gonlab
