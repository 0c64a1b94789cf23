#include "gonlab/surgery.hpp"

#include <stdexcept>
#include <string>

namespace gonlab {

Multigraph delete_and_pair(const Multigraph& g, Vertex v, const NeighborPairing& pairing) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete_and_pair: vertex out of range");
    if (g.vertex_count() < 2)
        throw std::invalid_argument("delete_and_pair: nothing would remain");
    if (g.valence(v) % 2 != 0)
        throw std::invalid_argument("delete_and_pair: v" + std::to_string(v + 1) + " has odd valence " +
                                    std::to_string(g.valence(v)));

    // The pairing must cover the edge slots at v exactly: neighbor u with
    // multiplicity m contributes m slots.
    std::vector<std::int64_t> slots(g.vertex_count(), 0);
    for (const auto& [u, m] : g.neighbors(v)) slots[u] = m;
    for (const auto& [a, b] : pairing) {
        if (a == b) throw std::invalid_argument("delete_and_pair: pairing joins a neighbor to itself");
        for (Vertex w : {a, b}) {
            if (w < 0 || w >= g.vertex_count() || w == v)
                throw std::invalid_argument("delete_and_pair: pairing names a non-neighbor");
            if (--slots[w] < 0)
                throw std::invalid_argument("delete_and_pair: pairing uses v" + std::to_string(w + 1) +
                                            " more often than its multiplicity at the deleted vertex");
        }
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (slots[u] != 0)
            throw std::invalid_argument("delete_and_pair: pairing leaves edge slots at v" +
                                        std::to_string(u + 1) + " uncovered");

    auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({shift(e.u), shift(e.v), e.mult});
    }
    for (const auto& [a, b] : pairing) edges.push_back({shift(a), shift(b), 1});
    return Multigraph(g.vertex_count() - 1, edges);
}

NeighborPairing harary_contraction_pairing(int k, int n_plus_1) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("contraction pairing needs even k >= 2");
    if (k >= n_plus_1) throw std::invalid_argument("contraction pairing needs k <= n");
    const int m = n_plus_1;
    NeighborPairing pairing;
    for (int l = 1; l <= k / 2; ++l) {
        int partner = ((l - (k / 2 + 1)) % m + m) % m;
        pairing.push_back({l, partner});
    }
    return pairing;
}

}  // namespace gonlab
