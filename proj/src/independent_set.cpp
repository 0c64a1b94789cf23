#include "gonlab/independent_set.hpp"

#include <bit>
#include <stdexcept>

namespace gonlab {

namespace {

struct Solver {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adjacency masks

    // Largest independent subset of `cand`, stopping early once `target`
    // is reachable (target < 0 disables the early exit).
    std::int64_t best = 0;

    std::int64_t grow(std::uint64_t cand, std::int64_t have, std::int64_t target) {
        if (target >= 0 && best >= target) return best;
        while (cand) {
            int popcnt = std::popcount(cand);
            if (have + popcnt <= best) return best;  // bound: cannot improve
            // Greedily absorb vertices of candidate-degree <= 1; taking them
            // is never worse than skipping them.
            bool simplified = false;
            std::uint64_t scan = cand;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                std::uint64_t nb = adj[v] & cand;
                int deg = std::popcount(nb);
                if (deg <= 1) {
                    cand &= ~(adj[v] & cand);
                    cand &= ~(std::uint64_t{1} << v);
                    ++have;
                    simplified = true;
                    break;
                }
            }
            if (simplified) continue;
            // Branch on a maximum-degree vertex: in or out.
            int pick = -1, pick_deg = -1;
            scan = cand;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                int deg = std::popcount(adj[v] & cand);
                if (deg > pick_deg) {
                    pick_deg = deg;
                    pick = v;
                }
            }
            std::uint64_t bit = std::uint64_t{1} << pick;
            grow(cand & ~(adj[pick] | bit), have + 1, target);
            if (target >= 0 && best >= target) return best;
            cand &= ~bit;  // exclude pick, keep looping
        }
        if (have > best) best = have;
        return best;
    }
};

Solver make_solver(const Multigraph& g, const IndependentSetOptions& opts) {
    if (!g.is_simple()) throw std::invalid_argument("independent set solver needs a simple graph");
    if (g.vertex_count() > opts.max_vertices || g.vertex_count() > 64)
        throw std::invalid_argument("independent set solver limited to " +
                                    std::to_string(std::min(opts.max_vertices, 64)) + " vertices");
    Solver s;
    s.n = g.vertex_count();
    s.adj.assign(s.n, 0);
    for (const Edge& e : g.edges()) {
        s.adj[e.u] |= std::uint64_t{1} << e.v;
        s.adj[e.v] |= std::uint64_t{1} << e.u;
    }
    return s;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

std::int64_t independence_number(const Multigraph& g, const IndependentSetOptions& opts) {
    Solver s = make_solver(g, opts);
    return s.grow(full_mask(s.n), 0, -1);
}

std::vector<Vertex> max_independent_set(const Multigraph& g, const IndependentSetOptions& opts) {
    Solver probe = make_solver(g, opts);
    const std::int64_t alpha = probe.grow(full_mask(probe.n), 0, -1);

    // Build the lexicographically smallest witness greedily: keep v iff the
    // remaining candidates can still complete a set of size alpha.
    std::vector<Vertex> chosen;
    std::uint64_t cand = full_mask(probe.n);
    std::int64_t need = alpha;
    for (int v = 0; v < probe.n && need > 0; ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(cand & bit)) continue;
        std::uint64_t after = cand & ~(probe.adj[v] | bit) & ~(bit - 1);
        Solver feas = probe;
        feas.best = 0;
        if (feas.grow(after, 0, need - 1) >= need - 1) {
            chosen.push_back(v);
            cand = after;
            --need;
        } else {
            cand &= ~bit;  // v cannot be part of a maximum set extending the prefix
        }
    }
    return chosen;
}

}  // namespace gonlab
