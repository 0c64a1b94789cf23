#include "gonlab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gonlab/reduction.hpp"

namespace gonlab {

namespace {

// Triangle profile of the chip blocks: f(b) = sum_i max(0, j_i - |j_k - b|).
// Vanishes outside [1, 2*j_k - 1], so callers can feed any integer.
std::int64_t block_profile(const std::vector<int>& offsets, std::int64_t b) {
    if (offsets.empty()) return 0;
    const std::int64_t peak = offsets.back();
    std::int64_t total = 0;
    for (int j : offsets) {
        std::int64_t part = j - std::abs(peak - b);
        if (part > 0) total += part;
    }
    return total;
}

void require_connected_circulant(const CirculantSpec& spec, const Multigraph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("circulant " + spec.key() + " is disconnected");
}

std::vector<int> drop_antipodal(const CirculantSpec& spec) {
    if (spec.n % 2 != 0 || !spec.has_antipodal_offset())
        throw std::invalid_argument("antipodal construction needs even n and the offset n/2");
    std::vector<int> rest(spec.offsets.begin(), spec.offsets.end() - 1);
    if (rest.empty())
        throw std::invalid_argument("antipodal construction needs an offset besides n/2");
    return rest;
}

}  // namespace

Divisor universal_divisor(const CirculantSpec& spec) {
    spec.validate();
    require_connected_circulant(spec, circulant(spec));
    const int n = spec.n;
    Divisor d(n);
    for (int a = 1; a <= n; ++a)
        d.chips[a - 1] = block_profile(spec.offsets, a) + block_profile(spec.offsets, n - a + 1);
    return d;
}

std::int64_t universal_degree(const std::vector<int>& offsets) {
    std::int64_t total = 0;
    for (int j : offsets) total += static_cast<std::int64_t>(j) * j;
    return 2 * total;
}

std::int64_t harary_even_bound(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("harary_even_bound needs even k >= 2");
    return static_cast<std::int64_t>(k) * (k + 1) * (k + 2) / 12;
}

std::int64_t harary_odd_bound(int k) {
    if (k < 3 || k % 2 != 1) throw std::invalid_argument("harary_odd_bound needs odd k >= 3");
    return static_cast<std::int64_t>(k - 1) * k * (k + 1) / 6;
}

Divisor antipodal_divisor(const CirculantSpec& spec) {
    spec.validate();
    require_connected_circulant(spec, circulant(spec));
    const int n = spec.n;
    const std::vector<int> rest = drop_antipodal(spec);
    Divisor d(n);
    for (int a = 1; a <= n; ++a) {
        // seam copy + half-turn copy
        d.chips[a - 1] = block_profile(rest, a) + block_profile(rest, n - a + 1) +
                         block_profile(rest, a - n / 2) + block_profile(rest, n / 2 - a + 1);
    }
    return d;
}

Divisor independent_complement_divisor(const Multigraph& g, const IndependentSetOptions& opts) {
    if (!g.is_simple())
        throw std::invalid_argument("independent_complement_divisor needs a simple graph");
    std::vector<Vertex> mis = max_independent_set(g, opts);
    Divisor d(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.chips[v] = 1;
    for (Vertex v : mis) d.chips[v] = 0;
    return d;
}

std::string to_string(TranslationCertificate::Mode mode) {
    switch (mode) {
        case TranslationCertificate::Mode::sweep: return "sweep";
        case TranslationCertificate::Mode::full_support: return "full_support";
        case TranslationCertificate::Mode::engine: return "engine";
    }
    return "?";
}

namespace {

// 0-based fired set at sweep step t: arcs [v_1, v_(arc+t)] and
// [v_(n-arc-t+1), v_n], optionally unioned with their half-turn images.
std::vector<Vertex> sweep_set(int n, int arc, int t, bool antipodal) {
    std::vector<char> in(n, 0);
    for (int i = 0; i < arc + t; ++i) {
        in[i] = 1;
        in[n - 1 - i] = 1;
        if (antipodal) {
            in[(i + n / 2) % n] = 1;
            in[(n - 1 - i + n / 2) % n] = 1;
        }
    }
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
        if (in[v]) s.push_back(v);
    return s;
}

TranslationCertificate engine_fallback(const Multigraph& g, const Divisor& d) {
    TranslationCertificate cert;
    cert.mode = TranslationCertificate::Mode::engine;
    cert.cumulative.fires.assign(g.vertex_count(), 0);
    if (has_positive_rank(g, d)) {
        cert.valid = true;
    } else {
        cert.failure = "divisor does not have positive rank";
    }
    return cert;
}

}  // namespace

TranslationCertificate verify_translation(const CirculantSpec& spec, bool antipodal) {
    spec.validate();
    const Multigraph g = circulant(spec);
    require_connected_circulant(spec, g);
    const int n = spec.n;

    std::vector<int> profile_offsets;
    int arc = 0;     // half-width of each fired arc at t = 0
    int steps = 0;   // sweep steps that keep the fired arcs disjoint and proper
    Divisor start(n);
    if (antipodal) {
        profile_offsets = drop_antipodal(spec);
        arc = profile_offsets.back();
        start = antipodal_divisor(spec);
        // Four chip blocks of width 2*arc-1 share a half turn of the cycle;
        // below n = 8*arc - 6 they collide and the shift picture breaks.
        if (n < 8 * arc - 6) return engine_fallback(g, start);
        for (int t = 0; 2 * t <= n / 2 - 2 * arc; ++t) ++steps;
    } else {
        profile_offsets = spec.offsets;
        arc = profile_offsets.back();
        start = universal_divisor(spec);
        for (int t = 0; 2 * t <= n - 2 * arc - 1; ++t) ++steps;
    }

    TranslationCertificate cert;
    cert.mode = TranslationCertificate::Mode::sweep;
    cert.steps = steps;
    cert.cumulative.fires.assign(n, 0);

    // Expected divisor after t steps: every block has slid t positions away
    // from its seam.
    auto expected = [&](int t) {
        Divisor e(n);
        for (int a = 1; a <= n; ++a) {
            std::int64_t c = block_profile(profile_offsets, a - t) +
                             block_profile(profile_offsets, n - a + 1 - t);
            if (antipodal)
                c += block_profile(profile_offsets, a - n / 2 - t) +
                     block_profile(profile_offsets, n / 2 - a + 1 - t);
            e.chips[a - 1] = c;
        }
        return e;
    };

    std::vector<char> touched(n, 0);
    auto record = [&](const Divisor& d) {
        for (int v = 0; v < n; ++v)
            if (d.chips[v] > 0) touched[v] = 1;
    };

    Divisor current = start;
    record(current);
    for (int t = 0; t < steps; ++t) {
        std::vector<Vertex> fired = sweep_set(n, arc, t, antipodal);
        if (!is_legal_set_firing(g, current, fired)) {
            cert.failure = "step " + std::to_string(t) + " would push a fired vertex into debt";
            cert.failed_step = t;
            return cert;
        }
        current = fire_set(g, current, fired);
        if (!current.is_effective()) {
            cert.failure = "step " + std::to_string(t) + " left a vertex in debt";
            cert.failed_step = t;
            return cert;
        }
        if (current != expected(t + 1)) {
            cert.failure = "step " + std::to_string(t) + " did not shift the chip blocks by one";
            cert.failed_step = t;
            return cert;
        }
        cert.fired_sets.push_back(fired);
        for (Vertex v : fired) ++cert.cumulative.fires[v];
        record(current);
    }

    if (steps == 0) cert.mode = TranslationCertificate::Mode::full_support;
    for (int v = 0; v < n; ++v) {
        if (!touched[v]) {
            cert.failure = "v" + std::to_string(v + 1) + " never receives a chip";
            cert.failed_step = steps;
            return cert;
        }
    }
    cert.valid = true;
    return cert;
}

}  // namespace gonlab
