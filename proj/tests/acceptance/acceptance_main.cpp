// Acceptance gate: one pass/fail line per claim the project stands on.
// Exit code is the number of failed claims (0 = all green).
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gonlab/cache.hpp"
#include "gonlab/circulant.hpp"
#include "gonlab/constructions.hpp"
#include "gonlab/divisor.hpp"
#include "gonlab/independent_set.hpp"
#include "gonlab/multigraph.hpp"
#include "gonlab/reduction.hpp"
#include "gonlab/search.hpp"
#include "gonlab/surgery.hpp"
#include "gonlab/tree_cut.hpp"

#include "../cli_runner.hpp"
#include "../test_support.hpp"

using namespace gonlab;
using nlohmann::json;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << label;
    if (!ok && !detail.empty()) std::cout << "  [" << detail.substr(0, 400) << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string shared_cache_path() {
    static const std::string path =
        (std::filesystem::temp_directory_path() /
         ("gonlab-acceptance-" + std::to_string(::getpid()) + ".jsonl"))
            .string();
    return path;
}

SearchConfig cached_config(const CirculantSpec& spec, ResultsCache& cache, int workers) {
    SearchConfig config;
    config.workers = workers;
    config.budget.max_candidates = 2'000'000'000;
    config.graph_key = spec.key();
    config.circulant = spec;
    config.cache = &cache;
    return config;
}

// ---- 1. closed-form gonality of the 4-regular family, small n ------------

bool check_harary4_values(ResultsCache& cache, std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    for (int n = 5; n <= 15; ++n) {
        const CirculantSpec spec = harary_spec(4, n);
        const auto result = gonality(circulant(spec), cached_config(spec, cache, 1));
        const int expected = n / 4 + (n + 1) / 4 + 2;
        const bool row = result.outcome == ScanOutcome::found && result.gonality &&
                         *result.gonality == expected && result.elapsed_ms <= 60'000;
        if (!row) {
            ok = false;
            why << " n=" << n << "->" << (result.gonality ? *result.gonality : -1) << " ("
                << result.elapsed_ms << "ms, want " << expected << ");";
        }
    }
    detail = why.str();
    return ok;
}

// ---- 2. the n=16 milestone: degree 9 empty, degree 10 witnessed ----------

bool check_harary4_16(ResultsCache& cache, std::string& detail) {
    const CirculantSpec spec = harary_spec(4, 16);
    const auto result = gonality(circulant(spec), cached_config(spec, cache, 8));
    std::ostringstream why;
    bool ok = result.outcome == ScanOutcome::found && result.gonality && *result.gonality == 10;
    if (!ok) why << "gonality " << (result.gonality ? *result.gonality : -1) << ";";
    bool saw_nine = false;
    bool saw_ten = false;
    for (const auto& scan : result.scans) {
        if (scan.degree == 9) saw_nine = scan.outcome == ScanOutcome::exhausted;
        if (scan.degree == 10) saw_ten = scan.outcome == ScanOutcome::found;
    }
    if (!saw_nine) {
        ok = false;
        why << " degree 9 not exhausted;";
    }
    if (!saw_ten) {
        ok = false;
        why << " degree 10 not found;";
    }
    if (result.witness) {
        if (!has_positive_rank(circulant(spec), *result.witness)) {
            ok = false;
            why << " witness fails the rank check;";
        }
    } else {
        ok = false;
        why << " no witness;";
    }
    if (result.elapsed_ms > 30 * 60'000) {
        ok = false;
        why << " took " << result.elapsed_ms << "ms;";
    }
    detail = why.str();
    return ok;
}

// ---- 3. block divisors across every small connected circulant ------------

bool check_block_divisors(std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    int cases = 0;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> offsets;
        for (int j = 1; j <= 4; ++j)
            if (mask & (1 << (j - 1))) offsets.push_back(j);
        const int top = offsets.back();
        for (int n = 2 * top; n <= 40; ++n) {
            const CirculantSpec spec{n, offsets};
            const Multigraph g = circulant(spec);
            if (!is_connected(g)) continue;
            ++cases;
            const Divisor d = universal_divisor(spec);
            std::ostringstream row;
            if (n >= 4 * top - 3 && d.degree() != universal_degree(offsets))
                row << " degree " << d.degree() << " != " << universal_degree(offsets) << ";";
            const auto cert = verify_translation(spec, false);
            if (!cert.valid) row << " certificate: " << cert.failure << ";";
            if (!has_positive_rank(g, d)) row << " rank check failed;";
            if (!row.str().empty()) {
                ok = false;
                why << " " << spec.key() << ":" << row.str();
            }
        }
    }
    if (cases < 100) {
        ok = false;
        why << " only " << cases << " cases;";
    }
    detail = why.str();
    return ok;
}

// ---- 4. the 3-regular family: values and the degree-4 antipodal witness --

bool check_harary3(ResultsCache& cache, std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    const std::vector<std::pair<int, int>> expected{{4, 3}, {6, 3}, {8, 4}, {10, 4}, {12, 4}};
    for (const auto& [n, want] : expected) {
        const CirculantSpec spec = harary_spec(3, n);
        const Multigraph g = circulant(spec);
        const auto result = gonality(g, cached_config(spec, cache, 1));
        if (!(result.gonality && *result.gonality == want)) {
            ok = false;
            why << " n=" << n << "->" << (result.gonality ? *result.gonality : -1) << ";";
            continue;
        }
        if (n >= 8) {
            bool exhausted_three = false;
            for (const auto& scan : result.scans)
                if (scan.degree == 3) exhausted_three = scan.outcome == ScanOutcome::exhausted;
            if (!exhausted_three) {
                ok = false;
                why << " n=" << n << " degree 3 not exhausted;";
            }
            const Divisor anti = antipodal_divisor(spec);
            const auto cert = verify_translation(spec, true);
            if (anti.degree() != 4 || !cert.valid || !has_positive_rank(g, anti)) {
                ok = false;
                why << " n=" << n << " antipodal witness failed;";
            }
        }
    }
    detail = why.str();
    return ok;
}

// ---- 5. independence numbers against the exact solver ---------------------

bool check_independence(std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    for (int k : {2, 4, 6, 8}) {
        for (int n = k + 1; n <= 30; ++n) {
            const auto formula = alpha_harary(k, n);
            const auto exact = independence_number(harary(k, n));
            if (formula != exact) {
                ok = false;
                why << " k=" << k << ",n=" << n << ": " << formula << " != " << exact << ";";
            }
        }
    }
    detail = why.str();
    return ok;
}

// ---- 6. monotone table + vertex-deletion surgery --------------------------

bool check_monotone_and_surgery(ResultsCache& cache, std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    std::vector<int> values;
    for (int n = 5; n <= 20; ++n) {
        const CirculantSpec spec = harary_spec(4, n);
        const auto result = gonality(circulant(spec), cached_config(spec, cache, 8));
        if (!result.gonality) {
            ok = false;
            why << " n=" << n << " unresolved;";
            values.push_back(-1);
            continue;
        }
        values.push_back(*result.gonality);
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] > 0 && values[i] > 0 && values[i] < values[i - 1]) {
            ok = false;
            why << " drop at n=" << (5 + i) << ";";
        }
    }
    for (int n = 5; n <= 20; ++n) {
        const auto contracted =
            delete_and_pair(harary(4, n + 1), 0, harary_contraction_pairing(4, n + 1));
        if (!(contracted == harary(4, n))) {
            ok = false;
            why << " surgery " << (n + 1) << "->" << n << " mismatch;";
        }
    }
    detail = why.str();
    return ok;
}

// ---- 7. the width-6 path decomposition across the family ------------------

bool check_screewidth(std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    for (int n = 6; n <= 60; ++n) {
        const auto width = tcd_width(harary(4, n), harary4_path_decomposition(n));
        if (width != 6) {
            ok = false;
            why << " n=" << n << " width " << width << ";";
        }
    }
    const auto tally = tcd_tally(harary(4, 14), harary4_path_decomposition(14));
    for (const auto load : tally.link_load)
        if (load != 6) {
            ok = false;
            why << " n=14 link load " << load << ";";
        }
    if (tally.node_load.front() != 3 || tally.node_load.back() != 2) {
        ok = false;
        why << " n=14 endpoint loads " << tally.node_load.front() << "," << tally.node_load.back()
            << ";";
    }
    detail = why.str();
    return ok;
}

// ---- 8. engine vs. first-principles divisor theory on a mixed corpus ------

std::vector<Multigraph> build_corpus(std::size_t cap) {
    std::vector<Multigraph> graphs;
    graphs.emplace_back(1);
    for (std::int64_t m = 1; m <= 3; ++m) graphs.push_back(Multigraph(2, {{0, 1, m}}));
    for (std::int64_t a = 0; a <= 3; ++a)
        for (std::int64_t b = 0; b <= 3; ++b)
            for (std::int64_t c = 0; c <= 3; ++c) {
                std::vector<Edge> edges;
                if (a) edges.push_back({0, 1, a});
                if (b) edges.push_back({0, 2, b});
                if (c) edges.push_back({1, 2, c});
                const Multigraph g(3, edges);
                if (is_connected(g)) graphs.push_back(g);
            }
    for (int n = 4; n <= 7 && graphs.size() < cap; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const std::uint32_t top = 1u << pairs.size();
        for (std::uint32_t mask = 1; mask < top && graphs.size() < cap; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask & (1u << i)) edges.push_back({pairs[i].first, pairs[i].second, 1});
            const Multigraph g(n, edges);
            bool subcubic = true;
            for (Vertex v = 0; v < n; ++v) subcubic = subcubic && g.valence(v) <= 3;
            if (subcubic && is_connected(g)) graphs.push_back(g);
        }
    }
    return graphs;
}

std::vector<Divisor> corpus_divisors(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<Divisor> out;
    out.emplace_back(n);
    Divisor spike(n);
    spike[0] = 1;
    out.push_back(spike);
    for (int s = 0; s < 2; ++s) {
        Divisor seeded(n);
        for (int v = 0; v < n; ++v) seeded[v] = (v * 5 + s * 7) % 4 - 1;
        out.push_back(seeded);
    }
    return out;
}

std::int64_t engine_rank(const Multigraph& g, const Divisor& d) {
    RankOptions opts;
    opts.max_rank = static_cast<int>(std::max<std::int64_t>(d.degree(), 0)) + 1;
    return rank(g, d, opts);
}

bool check_corpus(std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    const auto graphs = build_corpus(1000);
    std::size_t index = 0;
    for (const auto& g : graphs) {
        ++index;
        const int n = g.vertex_count();
        std::ostringstream row;

        for (const auto& d : corpus_divisors(g)) {
            const auto ours = engine_rank(g, d);
            const auto truth = oracle::rank(g, d, std::max<std::int64_t>(d.degree(), 0) + 1);
            if (ours != truth) row << " rank " << ours << " != " << truth << ";";

            for (Vertex q = 0; q < n; ++q) {
                const Divisor reduced = q_reduce(g, d, q);
                if (!(q_reduce(g, reduced, q) == reduced)) row << " reduce not idempotent;";
                if (!(oracle::q_reduce(g, d, q) == reduced)) row << " reduce != oracle;";
                if ((reduced[q] >= 0) != is_winnable(g, d)) row << " winnability depends on q;";
            }
        }

        if (n >= 2) {
            const Divisor zero(n);
            const Divisor k = oracle::canonical_divisor(g);
            const auto lhs = engine_rank(g, zero) - engine_rank(g, k);
            if (lhs != 0 - oracle::genus(g) + 1) row << " canonical duality (zero);";
            const auto seed = corpus_divisors(g).back();
            Divisor rest = k;
            for (int v = 0; v < n; ++v) rest[v] -= seed[v];
            const auto gap = engine_rank(g, seed) - engine_rank(g, rest);
            if (gap != seed.degree() - oracle::genus(g) + 1) row << " canonical duality (seed);";
        }

        for (int degree = 1; degree <= 3; ++degree) {
            bool brute = false;
            std::vector<std::int64_t> take(n, 0);
            oracle::for_each_effective(n, degree, take, 0,
                                       [&](const std::vector<std::int64_t>& chips) {
                                           if (oracle::positive_rank(g, Divisor(chips))) {
                                               brute = true;
                                               return false;
                                           }
                                           return true;
                                       });
            SearchConfig config;
            const auto scan = scan_degree(g, degree, config);
            const bool found = scan.outcome == ScanOutcome::found;
            if (brute != found)
                row << " degree " << degree << " search says " << to_string(scan.outcome) << ";";
        }

        if (!row.str().empty()) {
            ok = false;
            why << " graph#" << index << " (n=" << n << "):" << row.str();
            if (why.tellp() > 300) break;
        }
    }
    if (graphs.size() < 500) {
        ok = false;
        why << " corpus only " << graphs.size() << " graphs;";
    }
    detail = why.str();
    return ok;
}

// ---- 9. the CLI refuses honestly when the budget runs out -----------------

bool check_cli_budget(std::string& detail) {
    std::ostringstream why;
    bool ok = true;
    const auto result = clirun::run_cli("gon --graph harary:6,37 --budget 200000");
    if (result.exit_code != 2) {
        ok = false;
        why << " exit " << result.exit_code << ";";
    }
    try {
        const json doc = json::parse(result.out);
        if (doc.at("outcome") != "budget_exceeded") {
            ok = false;
            why << " outcome " << doc.at("outcome") << ";";
        }
        if (!doc.at("gonality").is_null()) {
            ok = false;
            why << " gonality not null;";
        }
        bool refused = false;
        for (const auto& scan : doc.at("degrees"))
            if (scan.at("outcome") == "budget_exceeded") refused = true;
        if (!refused) {
            ok = false;
            why << " no refused scan on record;";
        }
    } catch (const std::exception& e) {
        ok = false;
        why << " bad output: " << e.what() << ";";
    }
    detail = why.str();
    return ok;
}

template <typename Fn>
bool run_check(Fn&& fn, std::string& detail) {
    try {
        return fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        return false;
    }
}

}  // namespace

int main() {
    std::filesystem::remove(shared_cache_path());
    ResultsCache cache(shared_cache_path());
    std::string detail;

    bool ok = run_check([&](std::string& d) { return check_harary4_values(cache, d); }, detail);
    report(1, "4-regular circulants n=5..15 match floor(n/4)+floor((n+1)/4)+2, each row under a minute", ok, detail);

    ok = run_check([&](std::string& d) { return check_harary4_16(cache, d); }, detail);
    report(2, "16-vertex 4-regular circulant: gonality 10, degree 9 exhausted, witness certified", ok, detail);

    ok = run_check([](std::string& d) { return check_block_divisors(d); }, detail);
    report(3, "block divisor has positive rank on every connected circulant with offsets <= 4, n <= 40", ok, detail);

    ok = run_check([&](std::string& d) { return check_harary3(cache, d); }, detail);
    report(4, "3-regular family: gonality 3,3,4,4,4 at n=4..12 with the degree-4 antipodal witness", ok, detail);

    ok = run_check([](std::string& d) { return check_independence(d); }, detail);
    report(5, "independence numbers of Harary graphs match the closed form up to n=30", ok, detail);

    ok = run_check([&](std::string& d) { return check_monotone_and_surgery(cache, d); }, detail);
    report(6, "4-regular gonality table is nondecreasing and deletion surgery reproduces H_{4,n}", ok, detail);

    ok = run_check([](std::string& d) { return check_screewidth(d); }, detail);
    report(7, "three-per-node path decomposition has width 6 for every n in 6..60", ok, detail);

    ok = run_check([](std::string& d) { return check_corpus(d); }, detail);
    report(8, "reduction engine agrees with first-principles oracles on a 1000-graph corpus", ok, detail);

    ok = run_check([](std::string& d) { return check_cli_budget(d); }, detail);
    report(9, "CLI exits 2 with a budget_exceeded report when the candidate budget is spent", ok, detail);

    std::filesystem::remove(shared_cache_path());
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
