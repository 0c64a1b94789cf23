#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gonlab/cache.hpp"
#include "gonlab/circulant.hpp"
#include "gonlab/divisor.hpp"
#include "gonlab/multigraph.hpp"

namespace gonlab {

struct SearchBudget {
    /// Cap on enumerated candidates, shared across all degrees of one
    /// gonality call. Zero or negative means unlimited.
    std::int64_t max_candidates = 20'000'000;
    /// Optional wall-clock cap. Unlike the candidate cap this aborts
    /// mid-scan, so refusals under it are not reproducible.
    std::int64_t time_budget_ms = 0;
};

enum class ScanOutcome {
    found,            // a positive-rank divisor of this degree exists
    exhausted,        // every class of this degree was ruled out
    budget_exceeded,  // gave up before the scan was complete
};

std::string to_string(ScanOutcome outcome);

struct SearchConfig {
    int workers = 1;  ///< <= 0 picks hardware concurrency
    SearchBudget budget;
    std::optional<int> lower_bound;  ///< first degree to try
    std::optional<int> upper_bound;  ///< last degree to try (inclusive)
    /// Only enumerate candidates that are lexicographically minimal among
    /// the reduced forms of their rotations. Needs a circulant spec; class
    /// counts then count rotation orbits instead of classes.
    bool rotation_filter = false;
    ResultsCache* cache = nullptr;  ///< optional, settled scans only
    std::string graph_key;
    std::optional<CirculantSpec> circulant;
};

/// Result of scanning one degree.
struct DegreeScan {
    int degree = 0;
    ScanOutcome outcome = ScanOutcome::exhausted;
    /// Winnable divisor classes inspected: all of them when exhausted, the
    /// count up to and including the winner when found.
    std::int64_t classes = 0;
    /// Candidates enumerated, counted over the same deterministic prefix.
    std::int64_t candidates = 0;
    std::optional<Divisor> witness;  ///< first winner in candidate order
    std::int64_t elapsed_ms = 0;
    bool from_cache = false;
};

/// Scan a single degree for a positive-rank divisor class. The candidate
/// space is every chip vector with 0 <= D(v) < valence(v) away from the
/// base vertex v_1 and the remaining chips on v_1; Dhar's burning algorithm
/// keeps exactly one representative per winnable class. Candidates are
/// ordered lexicographically in (D(v_2), ..., D(v_n)); the reported witness
/// and counts are independent of the worker count.
DegreeScan scan_degree(const Multigraph& g, int degree, const SearchConfig& config);

struct SearchReport {
    std::string graph_key;
    std::optional<int> gonality;  ///< empty when the budget ran out first
    std::optional<Divisor> witness;
    std::vector<DegreeScan> scans;
    ScanOutcome outcome = ScanOutcome::found;
    std::int64_t elapsed_ms = 0;
    int worker_count = 1;
};

/// Smallest degree of a divisor with positive rank, by ascending scans from
/// the lower bound. The default upper bound is proven a priori (genus+1,
/// block divisor degrees, and for simple graphs n-1 and the independence
/// complement), so a fully exhausted range means an internal error and
/// throws; exhausting a caller-supplied upper bound instead reports the
/// exhausted outcome with no gonality.
SearchReport gonality(const Multigraph& g, const SearchConfig& config = {});

/// Gonality for H_{k,n_from}..H_{k,n_to}. For even k the value is known to
/// be monotone in n, and each result seeds the next lower bound; odd k
/// walks the even n only.
std::vector<SearchReport> gonality_table(int k, int n_from, int n_to, const SearchConfig& config = {});

/// Sequential walk over the degree-d candidate space in candidate order,
/// calling fn for every q-reduced candidate (one per winnable class).
/// Return false from fn to stop early. Exposed for cross-checking the
/// search counts.
void for_each_reduced_class(const Multigraph& g, int degree,
                            const std::function<bool(const Divisor&)>& fn);

}  // namespace gonlab
