#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gonlab/divisor.hpp"
#include "gonlab/multigraph.hpp"

namespace gonlab {

/// Reusable buffers for the burning loop, so the search hot path does not
/// allocate per candidate.
struct DharScratch {
    std::vector<std::int64_t> chips;
    std::vector<std::int64_t> threat;
    std::vector<char> burnt;
    std::vector<Vertex> frontier;
    std::vector<Vertex> unburnt;
};

/// Dhar's burning algorithm. Fire starts at q; a vertex burns as soon as
/// its chips are outnumbered by edges to already-burnt vertices. Returns
/// the unburnt set, which is the unique maximal set avoiding q that can
/// legally fire. Requires D(v) >= 0 for all v != q.
std::vector<Vertex> dhar_burn(const Multigraph& g, const Divisor& d, Vertex q);

/// The unique q-reduced divisor equivalent to D: non-negative away from q
/// and with an empty burn survivor set. The graph must be connected.
Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q);

struct ReductionWitness {
    Divisor reduced;
    FiringScript script;  // apply_script(g, d, script) == reduced
};

/// Same as q_reduce but also returns the accumulated firing script.
ReductionWitness q_reduce_with_script(const Multigraph& g, const Divisor& d, Vertex q);

/// True when D is equivalent to an effective divisor. Independent of the
/// internal base vertex choice.
bool is_winnable(const Multigraph& g, const Divisor& d);

struct RankOptions {
    /// Enumerating failure candidates of degree r+1 is exponential in r;
    /// give up past this point.
    int max_rank = 4;
};

/// Baker-Norine rank: largest r such that D minus any effective divisor of
/// degree r stays winnable; -1 when D itself is not. Throws GuardError when
/// the rank would exceed opts.max_rank.
std::int64_t rank(const Multigraph& g, const Divisor& d, const RankOptions& opts = {});

/// True when rank(D) >= 1, i.e. D survives one chip of debt anywhere.
bool has_positive_rank(const Multigraph& g, const Divisor& d);

/// Allocation-free variant for tight loops; requires an effective divisor.
bool has_positive_rank(const Multigraph& g, const std::vector<std::int64_t>& chips, DharScratch& scratch);

namespace detail {
/// Burn pass on raw chips (must be >= 0 away from q). Fills scratch.unburnt
/// ascending and leaves scratch.threat[v] = edges from v into the burnt set.
void burn(const Multigraph& g, const std::vector<std::int64_t>& chips, Vertex q, DharScratch& s);
}  // namespace detail

}  // namespace gonlab
