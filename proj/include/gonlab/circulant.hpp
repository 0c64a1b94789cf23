#pragma once

#include <string>
#include <vector>

#include "gonlab/multigraph.hpp"

namespace gonlab {

/// Circulant graph parameters: n vertices, jump set J.
///
/// Ci_n(J) joins v_i and v_m whenever the circular distance |i-m| mod n
/// lies in J. Offsets must be strictly increasing, in [1, n/2]. The
/// offset n/2 (n even) contributes a single edge per antipodal pair.
struct CirculantSpec {
    int n = 0;
    std::vector<int> offsets;

    /// Throws std::invalid_argument when the parameters are malformed.
    void validate() const;

    /// Largest offset, 0 when the jump set is empty.
    int max_offset() const { return offsets.empty() ? 0 : offsets.back(); }

    bool has_antipodal_offset() const { return n % 2 == 0 && !offsets.empty() && offsets.back() == n / 2; }

    /// Canonical key "ci:<n>:<j1>,<j2>,...".
    std::string key() const;
};

Multigraph circulant(const CirculantSpec& spec);

/// Jump set of the Harary graph H_{k,n}: {1..k/2} for even k, plus n/2
/// when k is odd (then n must be even). Rejects k >= n and odd k with odd n.
CirculantSpec harary_spec(int k, int n);

Multigraph harary(int k, int n);

/// Independence number of H_{k,n} for even k = 2*l: floor(n / (l+1)).
std::int64_t alpha_harary(int k, int n);

}  // namespace gonlab
