#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gonlab/circulant.hpp"
#include "gonlab/divisor.hpp"
#include "gonlab/independent_set.hpp"
#include "gonlab/multigraph.hpp"

namespace gonlab {

/// The block divisor for Ci_n(J): a symmetric stack of triangles of chips
/// centered one jump away from each side of the seam between v_1 and v_n.
/// Writing f(b) = sum_i max(0, j_i - |j_k - b|), vertex v_a receives
/// f(a) + f(n - a + 1); the two summands overlap only on small n.
/// Requires a connected circulant.
Divisor universal_divisor(const CirculantSpec& spec);

/// Degree of the block divisor once n is large enough that no chips merge:
/// 2 * sum of squared offsets.
std::int64_t universal_degree(const std::vector<int>& offsets);

/// Gonality upper bound for H_{k,n}, k even: k(k+1)(k+2)/12.
std::int64_t harary_even_bound(int k);

/// Gonality upper bound for H_{k,n}, k odd: (k-1)k(k+1)/6.
std::int64_t harary_odd_bound(int k);

/// Two copies of the block divisor for J minus the antipodal offset, one
/// centered on the seam (v_1, v_n) and one half a turn away. Requires even
/// n, the offset n/2 present, and at least one other offset.
Divisor antipodal_divisor(const CirculantSpec& spec);

/// One chip on every vertex outside a maximum independent set.
Divisor independent_complement_divisor(const Multigraph& g, const IndependentSetOptions& opts = {});

struct TranslationCertificate {
    enum class Mode {
        sweep,         // replayed the rotating set-firing sweep
        full_support,  // every vertex already carries a chip; nothing to sweep
        engine,        // fell back to a direct positive-rank check
    };

    bool valid = false;
    Mode mode = Mode::sweep;
    int steps = 0;
    /// Fired set per sweep step, in order.
    std::vector<std::vector<Vertex>> fired_sets;
    /// Sum of the per-step firings; applying it to the start divisor gives
    /// the final divisor of the sweep.
    FiringScript cumulative;
    std::string failure;   // empty on success
    int failed_step = -1;  // step index of the first violated check
};

/// Certifies that the block divisor has positive rank by replaying the
/// argument behind it: fire the two arcs around the seam, growing by one
/// vertex clockwise and one counterclockwise per step. Each step must stay
/// effective and shift every chip block by exactly one position, and the
/// sweep must drop a chip on every vertex at some point. In antipodal mode
/// the fired set is the union of the arcs and their half-turn images; when
/// n is too small for the four chip blocks to stay disjoint (n < 8j-6) the
/// certificate falls back to the reduction engine.
TranslationCertificate verify_translation(const CirculantSpec& spec, bool antipodal);

std::string to_string(TranslationCertificate::Mode mode);

}  // namespace gonlab
