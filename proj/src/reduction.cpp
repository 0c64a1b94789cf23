#include "gonlab/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "gonlab/errors.hpp"

namespace gonlab {

namespace {

void check_inputs(const Multigraph& g, const Divisor& d, Vertex q) {
    if (d.chips.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("divisor length does not match the graph");
    if (q < 0 || q >= g.vertex_count())
        throw std::invalid_argument("base vertex v" + std::to_string(q + 1) + " out of range");
}

// BFS distances from q; throws when some vertex is unreachable.
std::vector<int> distances_from(const Multigraph& g, Vertex q) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> bfs{q};
    dist[q] = 0;
    for (size_t head = 0; head < bfs.size(); ++head) {
        Vertex u = bfs[head];
        for (const auto& [v, m] : g.neighbors(u)) {
            (void)m;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                bfs.push_back(v);
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] < 0) throw std::invalid_argument("graph must be connected");
    return dist;
}

// Multi-fires the current unburnt set as often as it stays legal (at least
// once) and returns the multiplicity. scratch.threat holds out-degrees into
// the burnt region, as left behind by detail::burn.
std::int64_t fire_unburnt(const Multigraph& g, std::vector<std::int64_t>& chips, DharScratch& s) {
    std::int64_t t = std::numeric_limits<std::int64_t>::max();
    for (Vertex v : s.unburnt)
        if (s.threat[v] > 0) t = std::min(t, chips[v] / s.threat[v]);
    if (t == std::numeric_limits<std::int64_t>::max()) t = 1;  // no boundary: fires move nothing
    for (Vertex v : s.unburnt) {
        chips[v] -= t * s.threat[v];
        for (const auto& [u, m] : g.neighbors(v))
            if (s.burnt[u]) chips[u] += t * m;
    }
    return t;
}

// Raises every vertex outside q out of debt by firing distance balls around
// q. Processing layers far to near never re-indebts a finished layer: firing
// the ball of radius i-1 only touches layers <= i. Optionally records fires.
void clear_debt(const Multigraph& g, std::vector<std::int64_t>& chips, Vertex q,
                std::vector<std::int64_t>* fires) {
    const std::vector<int> dist = distances_from(g, q);
    int radius = *std::max_element(dist.begin(), dist.end());
    for (int layer = radius; layer >= 1; --layer) {
        std::int64_t rounds = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] != layer || chips[v] >= 0) continue;
            std::int64_t inward = 0;  // edges from v into the ball of radius layer-1
            for (const auto& [u, m] : g.neighbors(v))
                if (dist[u] < layer) inward += m;
            // inward >= 1: v sits in BFS layer `layer`, so it has a neighbor below
            rounds = std::max(rounds, (-chips[v] + inward - 1) / inward);
        }
        if (rounds == 0) continue;
        for (const Edge& e : g.edges()) {
            bool u_in = dist[e.u] < layer, v_in = dist[e.v] < layer;
            if (u_in == v_in) continue;
            Vertex from = u_in ? e.u : e.v;
            Vertex to = u_in ? e.v : e.u;
            chips[from] -= rounds * e.mult;
            chips[to] += rounds * e.mult;
        }
        if (fires)
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (dist[v] < layer) (*fires)[v] += rounds;
    }
}

constexpr std::int64_t kConvergenceCap = 1 << 26;  // bug trap, never hit legitimately

Divisor reduce_impl(const Multigraph& g, const Divisor& d, Vertex q, std::vector<std::int64_t>* fires) {
    check_inputs(g, d, q);
    std::vector<std::int64_t> chips = d.chips;
    clear_debt(g, chips, q, fires);
    DharScratch s;
    for (std::int64_t round = 0;; ++round) {
        if (round > kConvergenceCap) throw std::logic_error("q_reduce failed to converge");
        detail::burn(g, chips, q, s);
        if (s.unburnt.empty()) break;
        std::int64_t t = fire_unburnt(g, chips, s);
        if (fires)
            for (Vertex v : s.unburnt) (*fires)[v] += t;
    }
    return Divisor(std::move(chips));
}

}  // namespace

namespace detail {

void burn(const Multigraph& g, const std::vector<std::int64_t>& chips, Vertex q, DharScratch& s) {
    const int n = g.vertex_count();
    s.threat.assign(n, 0);
    s.burnt.assign(n, 0);
    s.frontier.clear();
    s.burnt[q] = 1;
    s.frontier.push_back(q);
    while (!s.frontier.empty()) {
        Vertex u = s.frontier.back();
        s.frontier.pop_back();
        for (const auto& [v, m] : g.neighbors(u)) {
            if (s.burnt[v]) continue;
            s.threat[v] += m;
            if (chips[v] < s.threat[v]) {
                s.burnt[v] = 1;
                s.frontier.push_back(v);
            }
        }
    }
    s.unburnt.clear();
    for (Vertex v = 0; v < n; ++v)
        if (!s.burnt[v]) s.unburnt.push_back(v);
}

}  // namespace detail

std::vector<Vertex> dhar_burn(const Multigraph& g, const Divisor& d, Vertex q) {
    check_inputs(g, d, q);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != q && d.chips[v] < 0)
            throw std::invalid_argument("dhar_burn needs D(v) >= 0 away from the base; v" +
                                        std::to_string(v + 1) + " holds " + std::to_string(d.chips[v]));
    DharScratch s;
    detail::burn(g, d.chips, q, s);
    return s.unburnt;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
    return reduce_impl(g, d, q, nullptr);
}

ReductionWitness q_reduce_with_script(const Multigraph& g, const Divisor& d, Vertex q) {
    ReductionWitness w;
    w.script.fires.assign(g.vertex_count(), 0);
    w.reduced = reduce_impl(g, d, q, &w.script.fires);
    // Normalize: shifting a script by a constant fires everyone equally,
    // which moves nothing. Pin the minimum at zero.
    std::int64_t lo = *std::min_element(w.script.fires.begin(), w.script.fires.end());
    for (auto& f : w.script.fires) f -= lo;
    return w;
}

bool is_winnable(const Multigraph& g, const Divisor& d) {
    if (d.chips.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("divisor length does not match the graph");
    if (d.degree() < 0) return false;
    return q_reduce(g, d, 0).chips[0] >= 0;
}

std::int64_t rank(const Multigraph& g, const Divisor& d, const RankOptions& opts) {
    if (!is_winnable(g, d)) return -1;
    const std::int64_t deg = d.degree();
    const int n = g.vertex_count();
    // Enumerate effective divisors E of degree r as non-decreasing vertex
    // multisets; stop at the first r where some D - E is unwinnable.
    std::vector<Vertex> pick;
    auto survives_all = [&](auto&& self, Divisor& work, Vertex from, int left) -> bool {
        if (left == 0) return is_winnable(g, work);
        for (Vertex v = from; v < n; ++v) {
            work.chips[v] -= 1;
            bool ok = self(self, work, v, left - 1);
            work.chips[v] += 1;
            if (!ok) return false;
        }
        return true;
    };
    for (std::int64_t r = 1; r <= deg; ++r) {
        // Proving rank == max_rank requires surviving the degree max_rank
        // sweep and failing at max_rank + 1, so allow one extra level.
        if (r > opts.max_rank + 1)
            throw GuardError("rank exceeds the configured guard of " + std::to_string(opts.max_rank));
        Divisor work = d;
        if (!survives_all(survives_all, work, 0, static_cast<int>(r))) return r - 1;
    }
    return deg;  // no effective divisor of degree deg+1 leaves a winnable remainder
}

bool has_positive_rank(const Multigraph& g, const std::vector<std::int64_t>& chips, DharScratch& s) {
    const int n = g.vertex_count();
    // Start the probe at a lowest-chip vertex: those fail fastest.
    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v)
        if (chips[v] < chips[start]) start = v;
    for (int off = 0; off < n; ++off) {
        Vertex q = (start + off) % n;
        s.chips = chips;
        if (--s.chips[q] >= 0) continue;  // still effective, trivially winnable
        bool covered = false;
        for (std::int64_t round = 0;; ++round) {
            if (round > kConvergenceCap) throw std::logic_error("debt probe failed to converge");
            detail::burn(g, s.chips, q, s);
            if (s.unburnt.empty()) break;
            fire_unburnt(g, s.chips, s);
            if (s.chips[q] >= 0) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool has_positive_rank(const Multigraph& g, const Divisor& d) {
    if (d.chips.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("divisor length does not match the graph");
    if (d.is_effective()) {
        if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
        DharScratch s;
        return has_positive_rank(g, d.chips, s);
    }
    for (Vertex q = 0; q < g.vertex_count(); ++q) {
        Divisor probe = d;
        probe.chips[q] -= 1;
        if (!is_winnable(g, probe)) return false;
    }
    return true;
}

}  // namespace gonlab
