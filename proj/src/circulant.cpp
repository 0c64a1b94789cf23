#include "gonlab/circulant.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace gonlab {

void CirculantSpec::validate() const {
    if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
    int prev = 0;
    for (int j : offsets) {
        if (j <= 0) throw std::invalid_argument("circulant offset " + std::to_string(j) + " must be positive");
        if (j <= prev) throw std::invalid_argument("circulant offsets must be strictly increasing");
        if (2 * j > n)
            throw std::invalid_argument("circulant offset " + std::to_string(j) + " exceeds n/2 for n = " +
                                        std::to_string(n));
        prev = j;
    }
}

std::string CirculantSpec::key() const {
    std::string s = "ci:" + std::to_string(n) + ":";
    for (size_t i = 0; i < offsets.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(offsets[i]);
    }
    return s;
}

Multigraph circulant(const CirculantSpec& spec) {
    spec.validate();
    // Offsets j < n/2 produce each unordered pair once per direction of
    // travel; the antipodal offset j = n/2 would produce it twice. Dedupe
    // through a pair set so every pair carries multiplicity one.
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (int j : spec.offsets) {
        for (int i = 0; i < spec.n; ++i) {
            int m = (i + j) % spec.n;
            if (i == m) continue;  // n = 1 or j = n degenerate
            pairs.insert({std::min(i, m), std::max(i, m)});
        }
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v, 1});
    return Multigraph(spec.n, edges);
}

CirculantSpec harary_spec(int k, int n) {
    if (k < 1) throw std::invalid_argument("harary needs k >= 1");
    if (k >= n) throw std::invalid_argument("harary needs k <= n-1");
    if (k % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("harary with odd k needs even n");
    CirculantSpec spec;
    spec.n = n;
    for (int j = 1; j <= k / 2; ++j) spec.offsets.push_back(j);
    if (k % 2 == 1) spec.offsets.push_back(n / 2);
    spec.validate();
    return spec;
}

Multigraph harary(int k, int n) { return circulant(harary_spec(k, n)); }

std::int64_t alpha_harary(int k, int n) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("alpha_harary needs even k >= 2");
    if (k >= n) throw std::invalid_argument("alpha_harary needs k <= n-1");
    int l = k / 2;
    return n / (l + 1);
}

}  // namespace gonlab
