#pragma once

#include <utility>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

/// Pairing of the edge slots at a vertex about to be deleted. Each entry
/// names two neighbors that get joined by a fresh edge; a neighbor joined
/// through m parallel edges must appear in exactly m entries.
using NeighborPairing = std::vector<std::pair<Vertex, Vertex>>;

/// Deletes `v` (which must have even valence), then adds one edge per pair.
/// Remaining vertices are re-indexed downward to stay contiguous.
Multigraph delete_and_pair(const Multigraph& g, Vertex v, const NeighborPairing& pairing);

/// The pairing that turns H_{k,n+1} minus vertex v1 into H_{k,n} for even k:
/// neighbor offset l is joined to offset l - (k/2 + 1), taken mod n+1.
/// Expressed on the vertices of H_{k,n+1} with v1 deleted.
NeighborPairing harary_contraction_pairing(int k, int n_plus_1);

}  // namespace gonlab
