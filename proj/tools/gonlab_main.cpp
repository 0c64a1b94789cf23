#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gonlab/cache.hpp"
#include "gonlab/circulant.hpp"
#include "gonlab/constructions.hpp"
#include "gonlab/errors.hpp"
#include "gonlab/graph_spec.hpp"
#include "gonlab/reduction.hpp"
#include "gonlab/scramble.hpp"
#include "gonlab/search.hpp"
#include "gonlab/text_format.hpp"
#include "gonlab/tree_cut.hpp"

namespace {

using gonlab::Divisor;
using gonlab::Vertex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;  // budget ran out or a guard refused to answer

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int env_workers() {
    if (const char* env = std::getenv("GONLAB_WORKERS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0) return static_cast<int>(value);
    }
    return 0;  // engine falls back to hardware concurrency
}

struct CommonFlags {
    std::string format = "json";
    std::uint64_t seed = 0;  // echoed for reproducibility of seeded harnesses
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", flags.seed, "seed echoed into the output");
    cmd->add_option("--workers", flags.workers, "worker threads (0 = GONLAB_WORKERS or hardware)");
}

int resolved_workers(const CommonFlags& flags) {
    return flags.workers > 0 ? flags.workers : env_workers();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_to_csv(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return v.dump();
}

// CSV rendering: scalar fields as key,value lines; one array-of-objects
// field (if present) follows as a regular header + rows table.
void emit_csv(const json& doc, const std::string& table_key, std::ostream& out) {
    for (const auto& [key, value] : doc.items())
        if (!value.is_array() && !value.is_object())
            out << key << ',' << scalar_to_csv(value) << '\n';
    if (table_key.empty() || !doc.contains(table_key)) return;
    const json& rows = doc.at(table_key);
    if (rows.empty()) return;
    out << '\n';
    bool header = true;
    for (const auto& row : rows) {
        if (header) {
            bool first = true;
            for (const auto& [key, value] : row.items()) {
                (void)value;
                out << (first ? "" : ",") << key;
                first = false;
            }
            out << '\n';
            header = false;
        }
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            out << (first ? "" : ",") << scalar_to_csv(value);
            first = false;
        }
        out << '\n';
    }
}

void emit(const json& doc, const CommonFlags& flags, const std::string& table_key = "") {
    if (flags.format == "csv")
        emit_csv(doc, table_key, std::cout);
    else
        std::cout << doc.dump(2) << '\n';
}

void print_cache_warnings(const gonlab::ResultsCache& cache) {
    for (const auto& warning : cache.warnings()) std::cerr << "cache: " << warning << '\n';
}

json scan_to_json(const gonlab::DegreeScan& scan) {
    return json{{"degree", scan.degree},
                {"outcome", gonlab::to_string(scan.outcome)},
                {"classes", scan.classes},
                {"candidates", scan.candidates},
                {"elapsed_ms", scan.elapsed_ms},
                {"from_cache", scan.from_cache}};
}

json report_to_json(const gonlab::SearchReport& report) {
    json degrees = json::array();
    for (const auto& scan : report.scans) degrees.push_back(scan_to_json(scan));
    json doc{{"graph_key", report.graph_key},
             {"outcome", gonlab::to_string(report.outcome)},
             {"degrees", degrees},
             {"elapsed_ms", report.elapsed_ms},
             {"worker_count", report.worker_count}};
    doc["gonality"] = report.gonality ? json(*report.gonality) : json(nullptr);
    doc["witness"] =
        report.witness ? json(gonlab::divisor_to_sparse(*report.witness)) : json(nullptr);
    return doc;
}

struct GonArgs {
    CommonFlags common;
    std::string graph;
    std::string cache_path;
    std::int64_t max_candidates = gonlab::SearchBudget{}.max_candidates;
    std::int64_t time_budget_ms = 0;
    int lower = 0;
    int upper = 0;
};

int run_gon(const GonArgs& args) {
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    gonlab::ResultsCache cache;
    if (!args.cache_path.empty()) {
        cache = gonlab::ResultsCache(args.cache_path);
        print_cache_warnings(cache);
    }
    gonlab::SearchConfig config;
    config.workers = resolved_workers(args.common);
    config.budget.max_candidates = args.max_candidates;
    config.budget.time_budget_ms = args.time_budget_ms;
    if (args.lower > 0) config.lower_bound = args.lower;
    if (args.upper > 0) config.upper_bound = args.upper;
    config.graph_key = parsed.key;
    config.circulant = parsed.circulant;
    if (cache.enabled()) config.cache = &cache;

    const gonlab::SearchReport report = gonlab::gonality(parsed.graph, config);
    json doc = report_to_json(report);
    doc["command"] = "gon";
    doc["graph"] = args.graph;
    doc["seed"] = args.common.seed;
    doc["budget"] = json{{"max_candidates", args.max_candidates},
                         {"time_budget_ms", args.time_budget_ms}};
    emit(doc, args.common, "degrees");
    return report.outcome == gonlab::ScanOutcome::found ? kExitOk : kExitUnknown;
}

struct TableArgs {
    CommonFlags common;
    std::string family;
    std::string range;
    std::string cache_path;
    std::int64_t max_candidates = gonlab::SearchBudget{}.max_candidates;
    std::int64_t time_budget_ms = 0;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range looks like 5..16, got '" + text + "'");
    const int from = std::stoi(text.substr(0, dots));
    const int to = std::stoi(text.substr(dots + 2));
    if (from <= 0 || to < from) throw std::invalid_argument("bad range '" + text + "'");
    return {from, to};
}

int run_table(const TableArgs& args) {
    if (args.family.rfind("harary:", 0) != 0)
        throw std::invalid_argument("table families look like harary:<k>");
    const int k = std::stoi(args.family.substr(7));
    const auto [from, to] = parse_range(args.range);
    gonlab::ResultsCache cache;
    if (!args.cache_path.empty()) {
        cache = gonlab::ResultsCache(args.cache_path);
        print_cache_warnings(cache);
    }
    gonlab::SearchConfig config;
    config.workers = resolved_workers(args.common);
    config.budget.max_candidates = args.max_candidates;
    config.budget.time_budget_ms = args.time_budget_ms;
    if (cache.enabled()) config.cache = &cache;

    const auto start = Clock::now();
    const auto reports = gonlab::gonality_table(k, from, to, config);
    bool all_found = true;
    json rows = json::array();
    for (const auto& report : reports) {
        const int n = std::stoi(report.graph_key.substr(3, report.graph_key.find(':', 3) - 3));
        json row{{"n", n},
                 {"graph_key", report.graph_key},
                 {"outcome", gonlab::to_string(report.outcome)},
                 {"degrees_scanned", report.scans.size()},
                 {"elapsed_ms", report.elapsed_ms}};
        row["gonality"] = report.gonality ? json(*report.gonality) : json(nullptr);
        row["witness"] =
            report.witness ? json(gonlab::divisor_to_sparse(*report.witness)) : json(nullptr);
        rows.push_back(row);
        all_found = all_found && report.outcome == gonlab::ScanOutcome::found;
    }
    json doc{{"command", "table"},     {"family", args.family},
             {"from", from},           {"to", to},
             {"rows", rows},           {"elapsed_ms", ms_since(start)},
             {"worker_count", reports.empty() ? resolved_workers(args.common) : reports.front().worker_count},
             {"seed", args.common.seed}};
    emit(doc, args.common, "rows");
    return all_found ? kExitOk : kExitUnknown;
}

struct DivisorArgs {
    CommonFlags common;
    std::string graph;
    std::string divisor;
    int base = 1;
    int max_rank = 4;
};

int run_rank(const DivisorArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    const Divisor d = gonlab::divisor_from_text(args.divisor, parsed.graph.vertex_count());
    json doc{{"command", "rank"}, {"graph", args.graph},       {"graph_key", parsed.key},
             {"divisor", args.divisor}, {"degree", d.degree()}, {"seed", args.common.seed}};
    bool capped = false;
    try {
        gonlab::RankOptions opts;
        opts.max_rank = args.max_rank;
        doc["rank"] = gonlab::rank(parsed.graph, d, opts);
    } catch (const gonlab::GuardError&) {
        doc["rank"] = nullptr;
        capped = true;
    }
    doc["rank_capped"] = capped;
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common);
    return capped ? kExitUnknown : kExitOk;
}

int run_reduce(const DivisorArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    const Divisor d = gonlab::divisor_from_text(args.divisor, parsed.graph.vertex_count());
    if (args.base < 1 || args.base > parsed.graph.vertex_count())
        throw std::invalid_argument("base vertex out of range");
    const Vertex q = args.base - 1;
    const auto witness = gonlab::q_reduce_with_script(parsed.graph, d, q);
    json doc{{"command", "reduce"},
             {"graph", args.graph},
             {"graph_key", parsed.key},
             {"divisor", args.divisor},
             {"base", "v" + std::to_string(args.base)},
             {"degree", d.degree()},
             {"reduced", gonlab::divisor_to_sparse(witness.reduced)},
             {"script", gonlab::script_to_sparse(witness.script)},
             {"winnable", witness.reduced.chips[static_cast<std::size_t>(q)] >= 0},
             {"seed", args.common.seed}};
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common);
    return kExitOk;
}

int run_verify(const DivisorArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    const Divisor d = gonlab::divisor_from_text(args.divisor, parsed.graph.vertex_count());
    json doc{{"command", "verify"},   {"graph", args.graph},   {"graph_key", parsed.key},
             {"divisor", args.divisor}, {"degree", d.degree()}, {"seed", args.common.seed}};
    doc["winnable"] = gonlab::is_winnable(parsed.graph, d);
    doc["positive_rank"] = gonlab::has_positive_rank(parsed.graph, d);
    bool capped = false;
    try {
        gonlab::RankOptions opts;
        opts.max_rank = args.max_rank;
        doc["rank"] = gonlab::rank(parsed.graph, d, opts);
    } catch (const gonlab::GuardError&) {
        doc["rank"] = nullptr;
        capped = true;
    }
    doc["rank_capped"] = capped;
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common);
    return capped ? kExitUnknown : kExitOk;
}

struct ConstructArgs {
    CommonFlags common;
    std::string spec;
    bool antipodal = false;
    std::string verify = "both";
};

int run_construct(const ConstructArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.spec);
    if (!parsed.circulant) throw std::invalid_argument("construct needs a circulant spec");
    const gonlab::CirculantSpec& spec = *parsed.circulant;
    const Divisor d =
        args.antipodal ? gonlab::antipodal_divisor(spec) : gonlab::universal_divisor(spec);
    json doc{{"command", "construct"},
             {"spec", args.spec},
             {"graph_key", parsed.key},
             {"antipodal", args.antipodal},
             {"divisor", gonlab::divisor_to_sparse(d)},
             {"degree", d.degree()},
             {"seed", args.common.seed}};
    bool ok = true;
    json verification = json::object();
    if (args.verify == "sweep" || args.verify == "both") {
        const auto cert = gonlab::verify_translation(spec, args.antipodal);
        verification["translation"] = json{{"valid", cert.valid},
                                           {"mode", gonlab::to_string(cert.mode)},
                                           {"steps", cert.steps},
                                           {"failure", cert.failure}};
        ok = ok && cert.valid;
    }
    if (args.verify == "engine" || args.verify == "both") {
        const bool positive = gonlab::has_positive_rank(parsed.graph, d);
        verification["engine"] = json{{"positive_rank", positive}};
        ok = ok && positive;
    }
    doc["verification"] = verification;
    doc["verified"] = ok;
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common);
    return ok ? kExitOk : kExitUsage;
}

struct ScwArgs {
    CommonFlags common;
    std::string graph;
    std::string construct = "path3";
};

int run_scw(const ScwArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    if (args.construct != "path3")
        throw std::invalid_argument("unknown decomposition '" + args.construct +
                                    "' (only path3 is built in)");
    const auto decomposition = gonlab::harary4_path_decomposition(parsed.graph.vertex_count());
    const auto tally = gonlab::tcd_tally(parsed.graph, decomposition);
    json tallies = json::array();
    for (std::size_t i = 0; i < tally.link_load.size(); ++i)
        tallies.push_back(json{{"kind", "link"}, {"index", i + 1}, {"load", tally.link_load[i]}});
    for (std::size_t i = 0; i < tally.node_load.size(); ++i)
        tallies.push_back(json{{"kind", "node"}, {"index", i + 1}, {"load", tally.node_load[i]}});
    json doc{{"command", "scw"},
             {"graph", args.graph},
             {"graph_key", parsed.key},
             {"construct", args.construct},
             {"width", tally.width},
             {"links", tally.link_load},
             {"nodes", tally.node_load},
             {"tallies", tallies},
             {"seed", args.common.seed}};
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common, "tallies");
    return kExitOk;
}

struct ScrambleArgs {
    CommonFlags common;
    std::string graph;
    std::string eggs;
    bool vertex_cuts = false;
};

std::vector<std::vector<Vertex>> parse_eggs(const std::string& text) {
    std::vector<std::vector<Vertex>> eggs;
    std::string egg;
    std::istringstream in(text);
    while (std::getline(in, egg, ';')) {
        std::vector<Vertex> members;
        std::string label;
        std::istringstream egg_in(egg);
        while (std::getline(egg_in, label, ',')) {
            if (label.find_first_not_of(" \t") == std::string::npos) continue;
            members.push_back(std::stoi(label) - 1);
        }
        eggs.push_back(std::move(members));
    }
    return eggs;
}

int run_scramble(const ScrambleArgs& args) {
    const auto start = Clock::now();
    const gonlab::ParsedGraph parsed = gonlab::parse_graph_spec(args.graph);
    const gonlab::Scramble scramble(parsed.graph, parse_eggs(args.eggs));
    gonlab::ScrambleOptions opts;
    opts.vertex_cuts = args.vertex_cuts;
    const auto hitting = gonlab::hitting_number(parsed.graph, scramble, opts);
    const auto cut = gonlab::egg_cut_number(parsed.graph, scramble, opts);
    json doc{{"command", "scramble"},
             {"graph", args.graph},
             {"graph_key", parsed.key},
             {"eggs", args.eggs},
             {"egg_count", scramble.eggs().size()},
             {"hitting", hitting},
             {"order", gonlab::scramble_order(parsed.graph, scramble, opts)},
             {"vertex_cuts", args.vertex_cuts},
             {"seed", args.common.seed}};
    doc["egg_cut"] = cut ? json(*cut) : json(nullptr);
    doc["elapsed_ms"] = ms_since(start);
    emit(doc, args.common);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chip-firing toolkit: gonality search, divisor reduction, and rank "
                 "certificates on circulant graphs"};
    app.require_subcommand(1);

    GonArgs gon_args;
    CLI::App* gon = app.add_subcommand("gon", "exact gonality by exhaustive degree scans");
    gon->add_option("--graph", gon_args.graph, "graph spec (ci:, harary:, file:)")->required();
    gon->add_option("--cache", gon_args.cache_path, "JSONL results cache path");
    gon->add_option("--budget", gon_args.max_candidates, "candidate budget (<=0 unlimited)");
    gon->add_option("--time-budget-ms", gon_args.time_budget_ms, "wall clock budget");
    gon->add_option("--lower", gon_args.lower, "first degree to scan");
    gon->add_option("--upper", gon_args.upper, "last degree to scan");
    add_common(gon, gon_args.common);

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "gonality across a Harary family");
    table->add_option("--family", table_args.family, "family spec, e.g. harary:4")->required();
    table->add_option("--n", table_args.range, "vertex range, e.g. 5..16")->required();
    table->add_option("--cache", table_args.cache_path, "JSONL results cache path");
    table->add_option("--budget", table_args.max_candidates, "candidate budget (<=0 unlimited)");
    table->add_option("--time-budget-ms", table_args.time_budget_ms, "wall clock budget");
    add_common(table, table_args.common);

    DivisorArgs rank_args;
    CLI::App* rank = app.add_subcommand("rank", "divisor rank via reduction sweeps");
    rank->add_option("--graph", rank_args.graph)->required();
    rank->add_option("--divisor", rank_args.divisor, "dense 'a,b,c' or sparse 'v2=3'")->required();
    rank->add_option("--max-rank", rank_args.max_rank, "refuse past this rank");
    add_common(rank, rank_args.common);

    DivisorArgs reduce_args;
    CLI::App* reduce = app.add_subcommand("reduce", "base-vertex reduced form and script");
    reduce->add_option("--graph", reduce_args.graph)->required();
    reduce->add_option("--divisor", reduce_args.divisor)->required();
    reduce->add_option("--base", reduce_args.base, "1-based base vertex (default v1)");
    add_common(reduce, reduce_args.common);

    DivisorArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "winnability, positive rank, exact rank");
    verify->add_option("--graph", verify_args.graph)->required();
    verify->add_option("--divisor", verify_args.divisor)->required();
    verify->add_option("--max-rank", verify_args.max_rank, "refuse past this rank");
    add_common(verify, verify_args.common);

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand("construct", "positive-rank block divisors");
    construct->add_option("--spec", construct_args.spec, "circulant spec ci:<n>:<j...>")->required();
    construct->add_flag("--antipodal", construct_args.antipodal, "use the antipodal variant");
    construct->add_option("--verify", construct_args.verify, "none|sweep|engine|both")
        ->check(CLI::IsMember({"none", "sweep", "engine", "both"}));
    add_common(construct, construct_args.common);

    ScwArgs scw_args;
    CLI::App* scw = app.add_subcommand("scw", "tree-cut decomposition width tallies");
    scw->add_option("--graph", scw_args.graph)->required();
    scw->add_option("--construct", scw_args.construct, "built-in decomposition (path3)");
    add_common(scw, scw_args.common);

    ScrambleArgs scramble_args;
    CLI::App* scramble = app.add_subcommand("scramble", "hitting and egg-cut numbers");
    scramble->add_option("--graph", scramble_args.graph)->required();
    scramble->add_option("--eggs", scramble_args.eggs, "semicolon-separated vertex lists, 1-based")
        ->required();
    scramble->add_flag("--vertex-cuts", scramble_args.vertex_cuts, "cut vertices instead of edges");
    add_common(scramble, scramble_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gon->parsed()) return run_gon(gon_args);
        if (table->parsed()) return run_table(table_args);
        if (rank->parsed()) return run_rank(rank_args);
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (construct->parsed()) return run_construct(construct_args);
        if (scw->parsed()) return run_scw(scw_args);
        if (scramble->parsed()) return run_scramble(scramble_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
