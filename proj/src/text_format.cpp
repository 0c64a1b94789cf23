#include "gonlab/text_format.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gonlab {
namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& raw, const char* what) {
    const std::string s = trim(raw);
    std::int64_t value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty())
        throw std::invalid_argument(std::string("bad integer '") + raw + "' in " + what);
    return value;
}

std::string sparse_entries(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) continue;
        if (!out.empty()) out += ',';
        out += 'v';
        out += std::to_string(i + 1);
        out += '=';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string divisor_to_sparse(const Divisor& d) { return sparse_entries(d.chips); }

std::string script_to_sparse(const FiringScript& s) { return sparse_entries(s.fires); }

Divisor divisor_from_text(const std::string& text, int n) {
    if (n <= 0) throw std::invalid_argument("divisor needs a positive vertex count");
    Divisor d(n);
    const std::string body = trim(text);
    if (body.empty() || body == "0") return d;
    if (body.find('=') != std::string::npos) {
        for (const auto& piece : split(body, ',')) {
            const std::string entry = trim(piece);
            if (entry.empty()) throw std::invalid_argument("empty entry in sparse divisor");
            if (entry[0] != 'v')
                throw std::invalid_argument("sparse divisor entries look like v3=2, got '" + entry + "'");
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("missing '=' in sparse divisor entry '" + entry + "'");
            const std::int64_t idx = parse_int(entry.substr(1, eq - 1), "sparse divisor index");
            if (idx < 1 || idx > n)
                throw std::invalid_argument("vertex v" + std::to_string(idx) + " out of range 1.." +
                                                                        std::to_string(n));
            d.chips[static_cast<std::size_t>(idx - 1)] = parse_int(entry.substr(eq + 1), "sparse divisor value");
        }
        return d;
    }
    const auto pieces = split(body, ',');
    if (static_cast<int>(pieces.size()) != n)
        throw std::invalid_argument("dense divisor has " + std::to_string(pieces.size()) +
                                                                " entries, graph has " + std::to_string(n) + " vertices");
    for (int i = 0; i < n; ++i) d.chips[static_cast<std::size_t>(i)] = parse_int(pieces[static_cast<std::size_t>(i)], "dense divisor");
    return d;
}

}  // namespace gonlab
