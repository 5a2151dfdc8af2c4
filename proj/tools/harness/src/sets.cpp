#include <charconv>
#include <fstream>

#include "ieq/behrend.hpp"
#include "ieq/error.hpp"
#include "ieq/harness/commands.hpp"
#include "ieq/sampling.hpp"

namespace ieq::harness {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& token) {
    std::int64_t v = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end) throw InvalidArgument("not an integer: '" + token + "'");
    return v;
}

int source_count(const SetSource& src) {
    return int(src.inline_list.has_value()) + int(src.file.has_value()) + int(src.full_group) +
           int(src.random.has_value()) + int(src.behrend.has_value());
}

void require_one_source(const SetSource& src) {
    if (source_count(src) != 1) {
        throw InvalidArgument("give exactly one of --set, --set-file, --full-group, --random, --behrend-set");
    }
}

BehrendOutput behrend_from(const std::string& spec) {
    const auto v = parse_int_list(spec);
    if (v.size() != 4) throw InvalidArgument("--behrend-set expects M,d,dprime,k");
    return build_behrend(BehrendParams{v[0], v[1], v[2], v[3]});
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = trim(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        out.push_back(parse_int(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::int64_t> read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read set file: " + path);
    std::vector<std::int64_t> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto token = trim(line);
        if (token.empty()) continue;
        const auto v = parse_int(token);
        if (v < 0) throw InvalidArgument("set file entries must be nonnegative: " + token);
        out.push_back(v);
    }
    return out;
}

ResidueSet resolve_residue_set(const SetSource& src, std::int64_t p, std::uint64_t seed) {
    require_one_source(src);
    const PrimeCyclicGroup g(p);
    if (src.inline_list) return ResidueSet(g, parse_int_list(*src.inline_list));
    if (src.file) return ResidueSet(g, read_set_file(*src.file));
    if (src.full_group) return ResidueSet::full(g);
    if (src.random) return random_residue_set(g, *src.random, seed);
    return behrend_from(*src.behrend).as_residue_set(g);
}

IntervalSet resolve_interval_set(const SetSource& src, std::int64_t n, std::uint64_t seed) {
    require_one_source(src);
    if (src.inline_list) return IntervalSet(n, parse_int_list(*src.inline_list));
    if (src.file) return IntervalSet(n, read_set_file(*src.file));
    if (src.full_group) {
        std::vector<std::int64_t> all;
        for (std::int64_t x = 1; x <= n; ++x) all.push_back(x);
        return IntervalSet(n, std::move(all));
    }
    if (src.random) return random_interval_set(n, *src.random, seed);
    const auto out = behrend_from(*src.behrend);
    if (n != out.universe) throw InvalidArgument("--N must equal M^(d+dprime) for a Behrend set");
    return out.as_interval_set();
}

}  // namespace ieq::harness
