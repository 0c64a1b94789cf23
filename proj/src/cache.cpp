#include "gonlab/cache.hpp"

#include <fstream>

#include <json.hpp>

namespace gonlab {

using nlohmann::json;

ResultsCache::ResultsCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // fresh cache file, created on first store
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, /*cb=*/nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object()) {
            warnings_.push_back(path_ + ":" + std::to_string(line_no) + ": unparsable cache line, skipped");
            continue;
        }
        CacheRecord r;
        try {
            r.graph_key = j.at("graph_key").get<std::string>();
            r.degree = j.at("degree").get<int>();
            r.exists = j.at("exists").get<bool>();
            r.witness = j.value("witness", std::string());
            r.classes = j.at("classes").get<std::int64_t>();
            r.candidates = j.value("candidates", std::int64_t{0});
            r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
            r.engine_version = j.at("engine_version").get<std::string>();
        } catch (const json::exception& e) {
            warnings_.push_back(path_ + ":" + std::to_string(line_no) + ": " + e.what() + ", skipped");
            continue;
        }
        if (r.engine_version != kEngineVersion) {
            warnings_.push_back(path_ + ":" + std::to_string(line_no) + ": engine version '" +
                                                    r.engine_version + "' != '" + kEngineVersion + "', skipped");
            continue;
        }
        records_[{r.graph_key, r.degree}] = r;
    }
}

std::optional<CacheRecord> ResultsCache::lookup(const std::string& graph_key, int degree) const {
    const auto it = records_.find({graph_key, degree});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultsCache::store(const CacheRecord& record) {
    if (!enabled()) return;
    const auto key = std::make_pair(record.graph_key, record.degree);
    if (records_.count(key)) return;
    records_[key] = record;
    json j{{"graph_key", record.graph_key},
           {"degree", record.degree},
           {"exists", record.exists},
           {"classes", record.classes},
           {"candidates", record.candidates},
           {"elapsed_ms", record.elapsed_ms},
           {"engine_version", record.engine_version}};
    if (record.exists) j["witness"] = record.witness;
    std::ofstream out(path_, std::ios::app);
    if (out) out << j.dump() << '\n';
}

}  // namespace gonlab
