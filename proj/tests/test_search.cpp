#include <doctest.h>

#include <filesystem>
#include <set>
#include <stdexcept>
#include <vector>

#include "gonlab/circulant.hpp"
#include "gonlab/divisor.hpp"
#include "gonlab/reduction.hpp"
#include "gonlab/search.hpp"
#include "test_support.hpp"

using namespace gonlab;

namespace {

bool same_scan(const DegreeScan& a, const DegreeScan& b) {
    return a.degree == b.degree && a.outcome == b.outcome && a.classes == b.classes &&
           a.candidates == b.candidates && a.witness == b.witness;
}

}  // namespace

TEST_CASE("the class walk visits every reduced divisor of a degree exactly once") {
    const auto c4 = oracle::cycle_graph(4);
    std::vector<Divisor> seen;
    for_each_reduced_class(c4, 1, [&](const Divisor& d) {
        seen.push_back(d);
        return true;
    });
    // all four degree-1 classes are already reduced, in tail-lexicographic order
    REQUIRE(seen.size() == 4);
    CHECK(seen[0].chips == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(seen[1].chips == std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK(seen[2].chips == std::vector<std::int64_t>{0, 0, 1, 0});
    CHECK(seen[3].chips == std::vector<std::int64_t>{0, 1, 0, 0});
    for (const auto& d : seen) CHECK(dhar_burn(c4, d, 0).empty());
}

TEST_CASE("the class walk agrees with a raw dedup over all effective divisors") {
    const auto g = harary(4, 11);
    const int degree = 7;

    std::set<std::vector<std::int64_t>> walked;
    for_each_reduced_class(g, degree, [&](const Divisor& d) {
        CHECK(walked.insert(d.chips).second);  // no repeats
        return true;
    });

    std::set<std::vector<std::int64_t>> reduced;
    std::vector<std::int64_t> chips(11, 0);
    oracle::for_each_effective(11, degree, chips, 0, [&](const std::vector<std::int64_t>& c) {
        reduced.insert(q_reduce(g, Divisor(c), 0).chips);
        return true;
    });

    CHECK(walked == reduced);
}

TEST_CASE("degree scans count classes and stop at the first winner") {
    const auto c4 = oracle::cycle_graph(4);
    SearchConfig config;

    const auto miss = scan_degree(c4, 1, config);
    CHECK(miss.outcome == ScanOutcome::exhausted);
    CHECK(miss.classes == 4);
    CHECK(miss.candidates == 4);
    CHECK_FALSE(miss.witness.has_value());

    const auto hit = scan_degree(c4, 2, config);
    CHECK(hit.outcome == ScanOutcome::found);
    REQUIRE(hit.witness.has_value());
    CHECK(hit.witness->chips == std::vector<std::int64_t>{2, 0, 0, 0});
    CHECK(hit.classes == 1);
    CHECK(hit.candidates == 1);

    CHECK(scan_degree(oracle::cycle_graph(5), 1, config).outcome == ScanOutcome::exhausted);
    const auto c5 = scan_degree(oracle::cycle_graph(5), 2, config);
    REQUIRE(c5.witness.has_value());
    CHECK(c5.witness->chips == std::vector<std::int64_t>{2, 0, 0, 0, 0});
}

TEST_CASE("scan counts match a sequential walk with the same order") {
    SearchConfig config;
    for (int degree : {1, 2, 3}) {
        const auto g = harary(3, 8);
        const auto scan = scan_degree(g, degree, config);
        std::int64_t walked = 0;
        std::optional<Divisor> first_winner;
        for_each_reduced_class(g, degree, [&](const Divisor& d) {
            ++walked;
            if (has_positive_rank(g, d)) {
                first_winner = d;
                return false;
            }
            return true;
        });
        CHECK(scan.classes == walked);
        CHECK(scan.witness == first_winner);
        CHECK((scan.outcome == ScanOutcome::found) == first_winner.has_value());
        CHECK(scan.candidates >= scan.classes);
    }
}

TEST_CASE("gonality anchors: cliques, cycles, cubes of the circulant family") {
    SearchConfig config;
    const auto k5 = gonality(oracle::complete_graph(5), config);
    CHECK(k5.gonality == 4);
    REQUIRE(k5.witness.has_value());
    CHECK(k5.witness->chips == std::vector<std::int64_t>{4, 0, 0, 0, 0});
    CHECK(k5.outcome == ScanOutcome::found);
    CHECK(k5.scans.size() == 4);

    CHECK(gonality(oracle::cycle_graph(6), config).gonality == 2);
    CHECK(gonality(harary(3, 8), config).gonality == 4);
    CHECK(gonality(harary(4, 6), config).gonality == 4);

    // the all-ones divisor on two vertices survives debt anywhere, so even a
    // thick banana has gonality two
    const auto banana = gonality(Multigraph(2, {{0, 1, 3}}), config);
    CHECK(banana.gonality == 2);
    REQUIRE(banana.witness.has_value());
    CHECK(banana.witness->chips == std::vector<std::int64_t>{1, 1});

    const auto single = gonality(Multigraph(1), config);
    CHECK(single.gonality == 1);
    REQUIRE(single.witness.has_value());
    CHECK(single.witness->chips == std::vector<std::int64_t>{1});
}

TEST_CASE("reports are identical for any worker count") {
    const auto g = harary(4, 10);
    SearchConfig one;
    one.workers = 1;
    SearchConfig four;
    four.workers = 4;

    const auto a = gonality(g, one);
    const auto b = gonality(g, four);
    CHECK(a.worker_count == 1);
    CHECK(b.worker_count == 4);
    CHECK(a.gonality == b.gonality);
    CHECK(a.witness == b.witness);
    CHECK(a.outcome == b.outcome);
    REQUIRE(a.scans.size() == b.scans.size());
    for (std::size_t i = 0; i < a.scans.size(); ++i) CHECK(same_scan(a.scans[i], b.scans[i]));
}

TEST_CASE("budget refusals are deterministic and stop at block granularity") {
    const auto g = harary(4, 10);
    SearchConfig unlimited;
    unlimited.budget.max_candidates = 0;
    const auto full = gonality(g, unlimited);
    REQUIRE(full.gonality == 6);

    std::int64_t total = 0;
    for (const auto& scan : full.scans) total += scan.candidates;

    // spend the budget exactly on the losing degrees: the final degree is
    // refused before it starts, and what was scanned replays unchanged
    SearchConfig tight;
    tight.budget.max_candidates = total - full.scans.back().candidates;
    const auto cut = gonality(g, tight);
    CHECK(cut.outcome == ScanOutcome::budget_exceeded);
    CHECK_FALSE(cut.gonality.has_value());
    REQUIRE(cut.scans.size() == full.scans.size() - 1);
    for (std::size_t i = 0; i < cut.scans.size(); ++i)
        CHECK(same_scan(cut.scans[i], full.scans[i]));

    // a few chips of budget truncate mid-degree, deterministically
    SearchConfig tiny;
    tiny.budget.max_candidates = 5;
    const auto refused = gonality(g, tiny);
    CHECK(refused.outcome == ScanOutcome::budget_exceeded);
    CHECK_FALSE(refused.gonality.has_value());
    CHECK(refused.scans.back().outcome == ScanOutcome::budget_exceeded);
    CHECK(refused.scans.back().candidates > 0);
    const auto again = gonality(g, tiny);
    REQUIRE(again.scans.size() == refused.scans.size());
    for (std::size_t i = 0; i < refused.scans.size(); ++i)
        CHECK(same_scan(again.scans[i], refused.scans[i]));
}

TEST_CASE("caller-capped degree ranges report exhaustion instead of guessing") {
    SearchConfig config;
    config.upper_bound = 3;
    const auto report = gonality(oracle::complete_graph(5), config);
    CHECK(report.outcome == ScanOutcome::exhausted);
    CHECK_FALSE(report.gonality.has_value());
    CHECK(report.scans.size() == 3);

    SearchConfig bad;
    bad.lower_bound = 5;
    bad.upper_bound = 3;
    CHECK_THROWS_AS(gonality(oracle::complete_graph(5), bad), std::invalid_argument);
}

TEST_CASE("the results cache replays settled scans and charges their cost") {
    const auto g = harary(4, 9);
    const auto path = std::filesystem::temp_directory_path() / "gonlab_search_cache_test.jsonl";
    std::filesystem::remove(path);

    {
        ResultsCache cache(path.string());
        SearchConfig config;
        config.cache = &cache;
        config.graph_key = "harary-4-9-test";
        const auto fresh = gonality(g, config);
        REQUIRE(fresh.gonality == 6);
        for (const auto& scan : fresh.scans) CHECK_FALSE(scan.from_cache);

        ResultsCache reload(path.string());
        CHECK(reload.warnings().empty());
        CHECK(reload.size() == fresh.scans.size());
        SearchConfig cached = config;
        cached.cache = &reload;
        const auto replay = gonality(g, cached);
        CHECK(replay.gonality == fresh.gonality);
        CHECK(replay.witness == fresh.witness);
        REQUIRE(replay.scans.size() == fresh.scans.size());
        for (std::size_t i = 0; i < replay.scans.size(); ++i) {
            CHECK(replay.scans[i].from_cache);
            CHECK(replay.scans[i].classes == fresh.scans[i].classes);
            CHECK(replay.scans[i].candidates == fresh.scans[i].candidates);
        }

        // recalling settled scans needs no budget
        SearchConfig recall = cached;
        recall.budget.max_candidates = 1;
        CHECK(gonality(g, recall).gonality == 6);
    }
    std::filesystem::remove(path);
}

TEST_CASE("partial caches refuse at the same degree as a cold run") {
    const auto g = harary(4, 10);
    const auto path = std::filesystem::temp_directory_path() / "gonlab_partial_cache_test.jsonl";
    std::filesystem::remove(path);

    SearchConfig unlimited;
    unlimited.budget.max_candidates = 0;
    const auto full = gonality(g, unlimited);
    std::int64_t total = 0;
    for (const auto& scan : full.scans) total += scan.candidates;
    const std::int64_t tight = total - full.scans.back().candidates;

    SearchConfig cold;
    cold.budget.max_candidates = tight;
    const auto cold_run = gonality(g, cold);
    REQUIRE(cold_run.outcome == ScanOutcome::budget_exceeded);
    REQUIRE(cold_run.scans.size() == full.scans.size() - 1);

    ResultsCache cache(path.string());
    SearchConfig warm = cold;
    warm.cache = &cache;
    warm.graph_key = "harary-4-10-test";
    const auto first = gonality(g, warm);   // stores the settled degrees
    const auto second = gonality(g, warm);  // replays them, then refuses alike
    REQUIRE(first.scans.size() == cold_run.scans.size());
    REQUIRE(second.scans.size() == cold_run.scans.size());
    for (std::size_t i = 0; i < cold_run.scans.size(); ++i) {
        CHECK(same_scan(first.scans[i], cold_run.scans[i]));
        CHECK(same_scan(second.scans[i], cold_run.scans[i]));
    }
    CHECK(second.scans.front().from_cache);
    CHECK(second.outcome == ScanOutcome::budget_exceeded);
    std::filesystem::remove(path);
}

TEST_CASE("the rotation filter keeps one orbit representative per class") {
    const auto spec = harary_spec(4, 10);
    const auto g = circulant(spec);
    SearchConfig plain;
    const auto base = gonality(g, plain);

    SearchConfig filtered;
    filtered.rotation_filter = true;
    filtered.circulant = spec;
    const auto orbit = gonality(g, filtered);

    CHECK(orbit.gonality == base.gonality);
    REQUIRE(orbit.scans.size() == base.scans.size());
    for (std::size_t i = 0; i < base.scans.size(); ++i) {
        CHECK(orbit.scans[i].outcome == base.scans[i].outcome);
        // orbits never outnumber classes on a settled degree; on the found
        // degree both runs stop at their own first winner, so the counts
        // are not comparable there
        if (base.scans[i].outcome == ScanOutcome::exhausted)
            CHECK(orbit.scans[i].classes <= base.scans[i].classes);
    }
    REQUIRE(orbit.witness.has_value());
    CHECK(orbit.witness->degree() == *orbit.gonality);
    CHECK(has_positive_rank(g, *orbit.witness));

    SearchConfig broken;
    broken.rotation_filter = true;
    CHECK_THROWS_AS(scan_degree(g, 2, broken), std::invalid_argument);
}

TEST_CASE("family tables walk the right vertex counts") {
    SearchConfig config;
    const auto cycles = gonality_table(2, 3, 6, config);
    REQUIRE(cycles.size() == 4);
    for (const auto& row : cycles) CHECK(row.gonality == 2);

    const auto cubic = gonality_table(3, 4, 8, config);
    REQUIRE(cubic.size() == 3);  // odd degree forces even n
    CHECK(cubic[0].graph_key == "ci:4:1,2");
    CHECK(cubic[0].gonality == 3);
    CHECK(cubic[1].gonality == 3);
    CHECK(cubic[2].gonality == 4);

    const auto quartic = gonality_table(4, 5, 9, config);
    REQUIRE(quartic.size() == 5);
    CHECK(quartic[0].gonality == 4);
    CHECK(quartic[1].gonality == 4);
    CHECK(quartic[2].gonality == 5);
    CHECK(quartic[3].gonality == 6);
    CHECK(quartic[4].gonality == 6);

    CHECK_THROWS_AS(gonality_table(2, 9, 5, config), std::invalid_argument);
}

TEST_CASE("searches demand sane inputs") {
    SearchConfig config;
    CHECK_THROWS_AS(gonality(Multigraph(2), config), std::invalid_argument);
    CHECK_THROWS_AS(scan_degree(oracle::cycle_graph(4), -1, config), std::invalid_argument);
}
