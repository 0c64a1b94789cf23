#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

/// A collection of eggs: non-empty vertex sets, each inducing a connected
/// subgraph. Validated (and each egg sorted, deduplicated) at construction.
class Scramble {
  public:
    Scramble(const Multigraph& g, std::vector<std::vector<Vertex>> eggs);
    const std::vector<std::vector<Vertex>>& eggs() const { return eggs_; }

  private:
    std::vector<std::vector<Vertex>> eggs_;
};

struct ScrambleOptions {
    int max_vertices = 64;  ///< the hitting solver packs vertex sets into masks
    int max_eggs = 64;
    /// Separate egg pairs by deleting vertices instead of edges. The order
    /// bound below uses edge cuts; this variant exists for comparison only.
    bool vertex_cuts = false;
};

/// Minimum size of a vertex set meeting every egg. Exact branch and bound.
std::int64_t hitting_number(const Multigraph& g, const Scramble& s,
                            const ScrambleOptions& opts = {});

/// Minimum, over pairs of disjoint eggs, of the smallest edge set whose
/// removal leaves the two eggs in different components (by max-flow between
/// the contracted eggs). Empty when no disjoint pair exists.
std::optional<std::int64_t> egg_cut_number(const Multigraph& g, const Scramble& s,
                                           const ScrambleOptions& opts = {});

/// min(hitting number, egg-cut number); a missing egg-cut number acts as
/// infinity. This is the quantity that lower-bounds gonality.
std::int64_t scramble_order(const Multigraph& g, const Scramble& s,
                            const ScrambleOptions& opts = {});

}  // namespace gonlab
