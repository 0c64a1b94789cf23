#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gonlab {

/// Bump when search semantics change; stale cache lines are ignored on load.
inline constexpr const char* kEngineVersion = "gonlab-1";

/// One settled degree scan: does graph_key carry a positive-rank divisor of
/// this degree, and how many reduced classes were inspected to decide it.
struct CacheRecord {
    std::string graph_key;
    int degree = 0;
    bool exists = false;
    std::string witness;  ///< sparse divisor text, empty unless exists
    std::int64_t classes = 0;
    std::int64_t candidates = 0;  ///< enumeration cost, replayed against budgets
    std::int64_t elapsed_ms = 0;
    std::string engine_version = kEngineVersion;
};

/// Append-only JSONL store keyed by (graph_key, degree). Loading is
/// tolerant: malformed lines and version mismatches become warnings and the
/// file is left untouched.
class ResultsCache {
  public:
    ResultsCache() = default;  ///< disabled: lookups miss, stores drop
    explicit ResultsCache(std::string path);

    bool enabled() const { return !path_.empty(); }
    std::optional<CacheRecord> lookup(const std::string& graph_key, int degree) const;
    void store(const CacheRecord& record);

    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t size() const { return records_.size(); }

  private:
    std::string path_;
    std::map<std::pair<std::string, int>, CacheRecord> records_;
    std::vector<std::string> warnings_;
};

}  // namespace gonlab
