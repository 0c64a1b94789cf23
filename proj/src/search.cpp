#include "gonlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "gonlab/constructions.hpp"
#include "gonlab/independent_set.hpp"
#include "gonlab/reduction.hpp"
#include "gonlab/text_format.hpp"

namespace gonlab {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kNoBlock = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kCountCap = std::numeric_limits<std::int64_t>::max() / 4;
// Enough blocks that worker pulls stay balanced; the block layout is fixed
// by the graph and degree alone so results cannot depend on the schedule.
constexpr std::int64_t kMinBlocks = 64;
constexpr std::int64_t kMaxBlocks = std::int64_t{1} << 22;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    return a > kCountCap - b ? kCountCap : a + b;
}

struct Block {
    std::vector<int> prefix;
    std::int64_t count = 0;       // candidates in the block
    std::int64_t cum_before = 0;  // candidates in all earlier blocks
    bool allowed = true;          // false once the candidate budget is spent
};

struct BlockResult {
    bool processed = false;
    bool won = false;
    std::int64_t classes = 0;         // whole block, or up to the winner
    std::int64_t win_candidates = 0;  // candidates up to and including the winner
    std::vector<std::int64_t> witness;
};

struct ScanPlan {
    std::vector<int> caps;  // caps[i] = valence(v_{i+2}) - 1
    int split = 0;          // leading coordinates that define a block
    std::vector<Block> blocks;
    std::vector<std::int64_t> split_row;  // tuple counts for coords split.. by remaining sum
    std::int64_t total_candidates = 0;
    std::int64_t allowed_candidates = 0;
    bool truncated = false;  // some blocks fell outside the budget
};

// Count the tuples (x_i, ..., x_{L-1}) with 0 <= x_j <= caps[j] and sum <= r,
// as one DP row per remaining-sum value, rolled down to row `split`.
std::vector<std::int64_t> count_row(const std::vector<int>& caps, int split, int degree) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(degree) + 1, 1);
    std::vector<std::int64_t> next(row.size());
    for (int i = static_cast<int>(caps.size()) - 1; i >= split; --i) {
        for (int r = 0; r <= degree; ++r) {
            std::int64_t total = 0;
            for (int t = 0; t <= std::min(caps[static_cast<std::size_t>(i)], r); ++t)
                total = sat_add(total, row[static_cast<std::size_t>(r - t)]);
            next[static_cast<std::size_t>(r)] = total;
        }
        row.swap(next);
    }
    return row;
}

ScanPlan make_plan(const Multigraph& g, int degree, std::int64_t max_candidates) {
    ScanPlan plan;
    const int n = g.vertex_count();
    plan.caps.reserve(static_cast<std::size_t>(n) - 1);
    for (Vertex v = 1; v < n; ++v)
        plan.caps.push_back(static_cast<int>(std::min<std::int64_t>(g.valence(v) - 1, degree)));
    const int coords = static_cast<int>(plan.caps.size());
    std::int64_t product = 1;
    while (plan.split < coords && product < kMinBlocks) {
        product = std::min<std::int64_t>(kCountCap,
                                         product * (plan.caps[static_cast<std::size_t>(plan.split)] + 1));
        ++plan.split;
    }
    plan.split_row = count_row(plan.caps, plan.split, degree);

    // Enumerate block prefixes in lexicographic order, pruned to sum <= degree.
    std::vector<int> prefix(static_cast<std::size_t>(plan.split), 0);
    std::int64_t cum = 0;
    const bool limited = max_candidates > 0;
    int level = 0;
    int sum = 0;
    for (;;) {
        if (level == plan.split) {
            Block b;
            b.prefix = prefix;
            b.count = plan.split_row[static_cast<std::size_t>(degree - sum)];
            b.cum_before = cum;
            b.allowed = !limited || cum < max_candidates;
            if (!b.allowed) plan.truncated = true;
            cum = sat_add(cum, b.count);
            if (static_cast<std::int64_t>(plan.blocks.size()) >= kMaxBlocks)
                throw std::logic_error("degree scan produced too many blocks");
            plan.blocks.push_back(std::move(b));
            --level;
            if (level < 0) break;
            sum -= prefix[static_cast<std::size_t>(level)];
            ++prefix[static_cast<std::size_t>(level)];
            continue;
        }
        const int cap = plan.caps[static_cast<std::size_t>(level)];
        if (prefix[static_cast<std::size_t>(level)] > cap || sum + prefix[static_cast<std::size_t>(level)] > degree) {
            prefix[static_cast<std::size_t>(level)] = 0;
            --level;
            if (level < 0) break;
            sum -= prefix[static_cast<std::size_t>(level)];
            ++prefix[static_cast<std::size_t>(level)];
            continue;
        }
        sum += prefix[static_cast<std::size_t>(level)];
        ++level;
    }
    plan.total_candidates = cum;
    for (const Block& b : plan.blocks)
        if (b.allowed) plan.allowed_candidates = sat_add(b.cum_before, b.count);
    return plan;
}

// Is this reduced divisor the lexicographically smallest among the reduced
// forms of its rotations? Rotation by any step is an automorphism of a
// circulant, so restricting the scan to these keeps one candidate per orbit.
bool rotation_canonical(const Multigraph& g, const std::vector<std::int64_t>& chips) {
    const int n = g.vertex_count();
    Divisor rotated(n);
    for (int k = 1; k < n; ++k) {
        for (int v = 0; v < n; ++v)
            rotated.chips[static_cast<std::size_t>((v + k) % n)] = chips[static_cast<std::size_t>(v)];
        const Divisor reduced = q_reduce(g, rotated, 0);
        if (reduced.chips < chips) return false;
    }
    return true;
}

struct SharedScan {
    const Multigraph& g;
    const ScanPlan& plan;
    int degree;
    bool rotation_filter;
    std::optional<Clock::time_point> deadline;
    std::atomic<std::int64_t> next_block{0};
    std::atomic<std::int64_t> best_block{kNoBlock};
    std::atomic<bool> out_of_time{false};
    std::vector<BlockResult> results{};
};

class Worker {
  public:
    explicit Worker(SharedScan& shared)
        : shared_(shared),
          n_(shared.g.vertex_count()),
          coords_(static_cast<int>(shared.plan.caps.size())),
          chips_(static_cast<std::size_t>(n_), 0) {}

    void run() {
        for (;;) {
            const std::int64_t b = shared_.next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= static_cast<std::int64_t>(shared_.plan.blocks.size())) return;
            if (shared_.out_of_time.load(std::memory_order_relaxed)) return;
            const Block& block = shared_.plan.blocks[static_cast<std::size_t>(b)];
            if (!block.allowed) continue;
            if (b > shared_.best_block.load(std::memory_order_relaxed)) continue;  // cannot matter
            process(b, block);
        }
    }

  private:
    void process(std::int64_t index, const Block& block) {
        BlockResult& result = shared_.results[static_cast<std::size_t>(index)];
        if (block.count == 0) {
            result.processed = true;
            return;
        }
        block_ = index;
        classes_ = 0;
        candidates_ = 0;
        aborted_ = false;
        int spent = 0;
        for (int i = 0; i < shared_.plan.split; ++i) {
            chips_[static_cast<std::size_t>(i) + 1] = block.prefix[static_cast<std::size_t>(i)];
            spent += block.prefix[static_cast<std::size_t>(i)];
        }
        const bool finished = descend(shared_.plan.split, shared_.degree - spent, result);
        if (aborted_) return;  // result slot is dead either way
        if (finished) {
            result.classes = classes_;
            result.processed = true;
        }
        // otherwise process() already recorded the winner
    }

    // Enumerate coordinates [coord, coords_) lexicographically; `left` chips
    // remain for them and for the base vertex. Returns false when stopping
    // early (winner found, block abandoned, or clock expired).
    bool descend(int coord, int left, BlockResult& result) {
        if (coord == coords_) return visit(left, result);
        const int cap = std::min(shared_.plan.caps[static_cast<std::size_t>(coord)], left);
        for (int t = 0; t <= cap; ++t) {
            chips_[static_cast<std::size_t>(coord) + 1] = t;
            if (!descend(coord + 1, left - t, result)) return false;
        }
        chips_[static_cast<std::size_t>(coord) + 1] = 0;
        return true;
    }

    bool visit(std::int64_t base_chips, BlockResult& result) {
        ++candidates_;
        if ((candidates_ & 0xFFF) == 0 && !checkpoint()) return false;
        chips_[0] = base_chips;
        detail::burn(shared_.g, chips_, 0, scratch_);
        if (!scratch_.unburnt.empty()) return true;  // some subset still fires: not reduced
        if (shared_.rotation_filter && !rotation_canonical(shared_.g, chips_)) return true;
        ++classes_;
        if (!has_positive_rank(shared_.g, chips_, scratch_)) return true;
        result.won = true;
        result.classes = classes_;
        result.win_candidates = candidates_;
        result.witness = chips_;
        result.processed = true;
        std::int64_t current = shared_.best_block.load(std::memory_order_relaxed);
        while (block_ < current &&
               !shared_.best_block.compare_exchange_weak(current, block_, std::memory_order_relaxed)) {
        }
        return false;
    }

    bool checkpoint() {
        if (shared_.deadline && Clock::now() > *shared_.deadline) {
            shared_.out_of_time.store(true, std::memory_order_relaxed);
            aborted_ = true;
            return false;
        }
        if (shared_.out_of_time.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return false;
        }
        if (block_ > shared_.best_block.load(std::memory_order_relaxed)) {
            aborted_ = true;  // a winner in an earlier block owns the answer
            return false;
        }
        return true;
    }

    SharedScan& shared_;
    int n_;
    int coords_;
    std::vector<std::int64_t> chips_;
    DharScratch scratch_;
    std::int64_t block_ = 0;
    std::int64_t classes_ = 0;
    std::int64_t candidates_ = 0;
    bool aborted_ = false;
};

int resolve_workers(const SearchConfig& config) {
    if (config.workers > 0) return config.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::int64_t elapsed_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

DegreeScan scan_impl(const Multigraph& g, int degree, const SearchConfig& config,
                     std::optional<Clock::time_point> deadline) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    if (config.rotation_filter && !config.circulant)
        throw std::invalid_argument("the rotation filter needs a circulant spec");
    const auto start = Clock::now();
    DegreeScan scan;
    scan.degree = degree;

    const ScanPlan plan = make_plan(g, degree, config.budget.max_candidates);
    SharedScan shared{g, plan, degree, config.rotation_filter, deadline};
    shared.results.resize(plan.blocks.size());

    const int workers = resolve_workers(config);
    if (workers == 1) {
        Worker(shared).run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back([&shared] { Worker(shared).run(); });
        for (auto& t : pool) t.join();
    }

    scan.elapsed_ms = elapsed_since(start);
    if (shared.out_of_time.load()) {
        scan.outcome = ScanOutcome::budget_exceeded;
        return scan;  // wall-clock aborts leave no reproducible partial counts
    }
    const std::int64_t winner = shared.best_block.load();
    if (winner != kNoBlock) {
        scan.outcome = ScanOutcome::found;
        std::int64_t classes = 0;
        for (std::int64_t b = 0; b < winner; ++b)
            classes = sat_add(classes, shared.results[static_cast<std::size_t>(b)].classes);
        const BlockResult& win = shared.results[static_cast<std::size_t>(winner)];
        scan.classes = sat_add(classes, win.classes);
        scan.candidates =
            sat_add(plan.blocks[static_cast<std::size_t>(winner)].cum_before, win.win_candidates);
        scan.witness = Divisor(g.vertex_count());
        scan.witness->chips = win.witness;
        return scan;
    }
    for (std::size_t b = 0; b < plan.blocks.size(); ++b)
        if (plan.blocks[b].allowed) scan.classes = sat_add(scan.classes, shared.results[b].classes);
    scan.candidates = plan.allowed_candidates;
    scan.outcome = plan.truncated ? ScanOutcome::budget_exceeded : ScanOutcome::exhausted;
    return scan;
}

int default_upper_bound(const Multigraph& g, const SearchConfig& config) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    // any divisor class of degree genus+1 has positive rank, so this always caps
    std::int64_t bound = g.edge_count() - n + 2;
    if (g.is_simple()) {
        bound = std::min<std::int64_t>(bound, n - 1);
        if (n <= 64) bound = std::min<std::int64_t>(bound, n - independence_number(g));
    }
    if (config.circulant) {
        const CirculantSpec& spec = *config.circulant;
        bound = std::min(bound, universal_degree(spec.offsets));
        if (spec.has_antipodal_offset() && spec.offsets.size() >= 2) {
            std::int64_t antipodal = 0;
            for (int j : spec.offsets)
                if (2 * j != spec.n) antipodal += 4 * static_cast<std::int64_t>(j) * j;
            bound = std::min(bound, antipodal);
        }
    }
    return static_cast<int>(std::max<std::int64_t>(bound, 1));
}

DegreeScan scan_from_cache(const CacheRecord& record, int n) {
    DegreeScan scan;
    scan.degree = record.degree;
    scan.outcome = record.exists ? ScanOutcome::found : ScanOutcome::exhausted;
    scan.classes = record.classes;
    scan.candidates = record.candidates;
    scan.elapsed_ms = 0;
    scan.from_cache = true;
    if (record.exists) scan.witness = divisor_from_text(record.witness, n);
    return scan;
}

CacheRecord to_cache_record(const DegreeScan& scan, const std::string& graph_key) {
    CacheRecord record;
    record.graph_key = graph_key;
    record.degree = scan.degree;
    record.exists = scan.outcome == ScanOutcome::found;
    if (scan.witness) record.witness = divisor_to_sparse(*scan.witness);
    record.classes = scan.classes;
    record.candidates = scan.candidates;
    record.elapsed_ms = scan.elapsed_ms;
    return record;
}

}  // namespace

std::string to_string(ScanOutcome outcome) {
    switch (outcome) {
        case ScanOutcome::found:
            return "found";
        case ScanOutcome::exhausted:
            return "exhausted";
        case ScanOutcome::budget_exceeded:
            return "budget_exceeded";
    }
    return "unknown";
}

DegreeScan scan_degree(const Multigraph& g, int degree, const SearchConfig& config) {
    if (!is_connected(g)) throw std::invalid_argument("degree scans need a connected graph");
    std::optional<Clock::time_point> deadline;
    if (config.budget.time_budget_ms > 0)
        deadline = Clock::now() + std::chrono::milliseconds(config.budget.time_budget_ms);
    return scan_impl(g, degree, config, deadline);
}

SearchReport gonality(const Multigraph& g, const SearchConfig& config) {
    if (!is_connected(g)) throw std::invalid_argument("gonality needs a connected graph");
    const auto start = Clock::now();
    SearchReport report;
    report.graph_key = config.graph_key;
    report.worker_count = resolve_workers(config);

    std::optional<Clock::time_point> deadline;
    if (config.budget.time_budget_ms > 0)
        deadline = start + std::chrono::milliseconds(config.budget.time_budget_ms);

    const int lower = std::max(config.lower_bound.value_or(1), 0);
    const int upper = config.upper_bound.value_or(default_upper_bound(g, config));
    if (lower > upper) throw std::invalid_argument("lower bound exceeds the degree upper bound");
    const bool limited = config.budget.max_candidates > 0;
    std::int64_t spent = 0;

    for (int degree = lower; degree <= upper; ++degree) {
        std::optional<CacheRecord> hit;
        if (config.cache && config.cache->enabled())
            hit = config.cache->lookup(config.graph_key, degree);
        DegreeScan scan;
        if (hit) {
            scan = scan_from_cache(*hit, g.vertex_count());
        } else {
            if (limited && spent >= config.budget.max_candidates) {
                report.outcome = ScanOutcome::budget_exceeded;
                report.elapsed_ms = elapsed_since(start);
                return report;
            }
            SearchConfig scoped = config;
            if (limited) scoped.budget.max_candidates = config.budget.max_candidates - spent;
            scan = scan_impl(g, degree, scoped, deadline);
            if (config.cache && scan.outcome != ScanOutcome::budget_exceeded)
                config.cache->store(to_cache_record(scan, config.graph_key));
        }
        // Cached scans charge their recorded cost so budget refusals land on
        // the same degree whether or not earlier scans were cached.
        spent = sat_add(spent, scan.candidates);
        report.scans.push_back(scan);
        if (scan.outcome == ScanOutcome::found) {
            report.gonality = degree;
            report.witness = scan.witness;
            report.outcome = ScanOutcome::found;
            report.elapsed_ms = elapsed_since(start);
            return report;
        }
        if (scan.outcome == ScanOutcome::budget_exceeded) {
            report.outcome = ScanOutcome::budget_exceeded;
            report.elapsed_ms = elapsed_since(start);
            return report;
        }
    }
    if (config.upper_bound) {
        // the caller capped the range; running out of it is an honest answer
        report.outcome = ScanOutcome::exhausted;
        report.elapsed_ms = elapsed_since(start);
        return report;
    }
    throw std::logic_error("every degree through a proven upper bound was exhausted");
}

std::vector<SearchReport> gonality_table(int k, int n_from, int n_to, const SearchConfig& config) {
    if (n_from > n_to) throw std::invalid_argument("empty vertex range");
    std::vector<SearchReport> out;
    std::optional<int> floor;
    int n = n_from;
    if (k % 2 == 1 && n % 2 == 1) ++n;
    const int step = k % 2 == 1 ? 2 : 1;
    for (; n <= n_to; n += step) {
        const CirculantSpec spec = harary_spec(k, n);
        SearchConfig scoped = config;
        scoped.graph_key = spec.key();
        scoped.circulant = spec;
        if (k % 2 == 0 && floor)  // gonality of H_{k,n} never drops as n grows
            scoped.lower_bound = std::max(config.lower_bound.value_or(1), *floor);
        SearchReport report = gonality(circulant(spec), scoped);
        if (k % 2 == 0 && report.gonality) floor = report.gonality;
        out.push_back(std::move(report));
    }
    return out;
}

void for_each_reduced_class(const Multigraph& g, int degree,
                            const std::function<bool(const Divisor&)>& fn) {
    if (!is_connected(g)) throw std::invalid_argument("class walks need a connected graph");
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    const int n = g.vertex_count();
    Divisor d(n);
    DharScratch scratch;
    // Plain nested loops over the same candidate order as the block scan,
    // kept separate so the two counts cross-check each other.
    std::function<bool(int, std::int64_t)> walk = [&](int v, std::int64_t left) -> bool {
        if (v == n) {
            d.chips[0] = left;
            detail::burn(g, d.chips, 0, scratch);
            if (!scratch.unburnt.empty()) return true;
            return fn(d);
        }
        const std::int64_t cap = std::min<std::int64_t>(g.valence(v) - 1, left);
        for (std::int64_t t = 0; t <= cap; ++t) {
            d.chips[static_cast<std::size_t>(v)] = t;
            if (!walk(v + 1, left - t)) return false;
        }
        d.chips[static_cast<std::size_t>(v)] = 0;
        return true;
    };
    walk(1, degree);
}

}  // namespace gonlab
