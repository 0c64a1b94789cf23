#include "gonlab/tree_cut.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace gonlab {
namespace {

struct RootedTree {
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> parent_link;  // index into tree.edges() for (node, parent)
};

RootedTree root_tree(const Multigraph& tree) {
    const int nodes = tree.vertex_count();
    if (tree.edge_count() != nodes - 1 || !is_connected(tree) || !tree.is_simple())
        throw std::invalid_argument("decomposition tree must be a tree");
    std::map<std::pair<Vertex, Vertex>, int> link_index;
    const auto& links = tree.edges();
    for (std::size_t i = 0; i < links.size(); ++i)
        link_index[{links[i].u, links[i].v}] = static_cast<int>(i);
    RootedTree rooted{std::vector<int>(static_cast<std::size_t>(nodes), -1),
                      std::vector<int>(static_cast<std::size_t>(nodes), 0),
                      std::vector<int>(static_cast<std::size_t>(nodes), -1)};
    std::queue<Vertex> bfs;
    bfs.push(0);
    rooted.parent[0] = 0;
    while (!bfs.empty()) {
        const Vertex u = bfs.front();
        bfs.pop();
        for (const auto& [w, mult] : tree.neighbors(u)) {
            (void)mult;
            if (rooted.parent[static_cast<std::size_t>(w)] >= 0) continue;
            rooted.parent[static_cast<std::size_t>(w)] = u;
            rooted.depth[static_cast<std::size_t>(w)] = rooted.depth[static_cast<std::size_t>(u)] + 1;
            rooted.parent_link[static_cast<std::size_t>(w)] =
                link_index.at({std::min(u, w), std::max(u, w)});
            bfs.push(w);
        }
    }
    return rooted;
}

}  // namespace

TcdTally tcd_tally(const Multigraph& g, const TreeCutDecomposition& decomposition) {
    const int nodes = decomposition.tree.vertex_count();
    if (static_cast<int>(decomposition.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("assignment must place every graph vertex");
    for (int node : decomposition.assignment)
        if (node < 0 || node >= nodes)
            throw std::invalid_argument("assignment targets a missing tree node");
    const RootedTree rooted = root_tree(decomposition.tree);

    TcdTally tally;
    tally.link_load.assign(decomposition.tree.edges().size(), 0);
    tally.node_load.assign(static_cast<std::size_t>(nodes), 0);
    for (int node : decomposition.assignment) ++tally.node_load[static_cast<std::size_t>(node)];

    for (const Edge& e : g.edges()) {
        int a = decomposition.assignment[static_cast<std::size_t>(e.u)];
        int b = decomposition.assignment[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        // Walk both endpoints up to their meeting node; every link crossed
        // carries the edge, and every node strictly inside the path is
        // tunnelled through.
        while (a != b) {
            int* lift = &a;
            if (rooted.depth[static_cast<std::size_t>(b)] > rooted.depth[static_cast<std::size_t>(a)])
                lift = &b;
            tally.link_load[static_cast<std::size_t>(rooted.parent_link[static_cast<std::size_t>(*lift)])] += e.mult;
            *lift = rooted.parent[static_cast<std::size_t>(*lift)];
            if (a != b) {
                // *lift is now an interior node of the routed path
                tally.node_load[static_cast<std::size_t>(*lift)] += e.mult;
            }
        }
    }
    tally.width = 0;
    for (std::int64_t load : tally.link_load) tally.width = std::max(tally.width, load);
    for (std::int64_t load : tally.node_load) tally.width = std::max(tally.width, load);
    return tally;
}

std::int64_t tcd_width(const Multigraph& g, const TreeCutDecomposition& decomposition) {
    return tcd_tally(g, decomposition).width;
}

TreeCutDecomposition harary4_path_decomposition(int n) {
    if (n < 5) throw std::invalid_argument("the path decomposition needs n >= 5");
    const int nodes = (n + 2) / 3;
    std::vector<Edge> links;
    links.reserve(static_cast<std::size_t>(nodes) - 1);
    for (int i = 0; i + 1 < nodes; ++i) links.push_back(Edge{i, i + 1, 1});
    TreeCutDecomposition out{Multigraph(nodes, links), std::vector<int>(static_cast<std::size_t>(n))};
    for (int v = 0; v < n; ++v) out.assignment[static_cast<std::size_t>(v)] = v / 3;
    return out;
}

}  // namespace gonlab
