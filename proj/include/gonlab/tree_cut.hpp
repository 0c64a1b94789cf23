#pragma once

#include <cstdint>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

/// A tree whose nodes hold the graph's vertices: assignment[v] is the tree
/// node carrying graph vertex v. Every graph edge is routed along the tree
/// path between its endpoints' nodes.
struct TreeCutDecomposition {
    Multigraph tree;
    std::vector<int> assignment;
};

struct TcdTally {
    /// Load per link, indexed like tree.edges(): total multiplicity of
    /// graph edges routed across the link.
    std::vector<std::int64_t> link_load;
    /// Load per node: vertices assigned to it plus graph edges tunnelling
    /// through it (routed through the node with neither endpoint inside).
    std::vector<std::int64_t> node_load;
    std::int64_t width = 0;  ///< max over all link and node loads
};

/// Validates the decomposition (tree really is a tree, assignment total and
/// in range) and tallies every link and node in one pass over the edges.
TcdTally tcd_tally(const Multigraph& g, const TreeCutDecomposition& decomposition);

std::int64_t tcd_width(const Multigraph& g, const TreeCutDecomposition& decomposition);

/// The path decomposition that pins the 4-regular circulant's order bound:
/// ceil(n/3) nodes in a path, three consecutive vertices per node. Needs
/// n >= 5. Its width against H_{4,n} is 6 for every n >= 6.
TreeCutDecomposition harary4_path_decomposition(int n);

}  // namespace gonlab
