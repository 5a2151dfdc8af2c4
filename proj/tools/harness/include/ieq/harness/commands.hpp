#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ieq/cyclic.hpp"
#include "ieq/harness/report.hpp"

namespace ieq::harness {

/// Where a set comes from. Exactly one source must be given.
struct SetSource {
    std::optional<std::string> inline_list;  ///< "1,2,5"
    std::optional<std::string> file;         ///< one nonnegative integer per line
    bool full_group = false;                 ///< needs p
    std::optional<std::size_t> random;       ///< K seeded draws
    std::optional<std::string> behrend;      ///< "M,d,dprime,k"
};

/// p for Z/pZ or N for {1..N}; exactly one is set.
struct Ambient {
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> n;
};

struct RunContext {
    std::uint64_t seed = 0;
    bool both = false;
};

std::vector<std::int64_t> parse_int_list(const std::string& text);
std::vector<std::int64_t> read_set_file(const std::string& path);
ResidueSet resolve_residue_set(const SetSource& src, std::int64_t p, std::uint64_t seed);
IntervalSet resolve_interval_set(const SetSource& src, std::int64_t n, std::uint64_t seed);

struct CountConfig {
    Ambient ambient;
    SetSource set;
    std::string equation;            ///< "1,1,-2"
    std::string trivial = "all_equal";  ///< or "sidon"
    std::string method = "fast";     ///< or "bruteforce"
};
Report cmd_count(const CountConfig& config, const RunContext& ctx);

struct BehrendConfig {
    std::optional<std::int64_t> base, constrained, free_digits;
    std::optional<double> alpha;
    std::int64_t arity = 0;
    double c = 0.25;
    std::optional<std::string> set_out;
};
Report cmd_behrend(const BehrendConfig& config, const RunContext& ctx);

struct BohrConfig {
    std::int64_t p = 0;
    std::string gamma;
    double rho = 0.0;
    std::optional<double> delta;
    std::optional<std::int64_t> scale;
    bool enumerate = false;
    bool regularity = false;
    bool find_regular = false;
};
Report cmd_bohr(const BohrConfig& config, const RunContext& ctx);

struct SpectrumConfig {
    std::int64_t p = 0;
    SetSource set;
    double delta = 0.0;
};
Report cmd_spectrum(const SpectrumConfig& config, const RunContext& ctx);

struct PeriodsConfig {
    std::int64_t p = 0;
    std::string a, l;
    double epsilon = 0.0;
    std::string norm = "1";  ///< a real q >= 1 or "inf"
};
Report cmd_periods(const PeriodsConfig& config, const RunContext& ctx);

struct IncrementCommandConfig {
    std::int64_t p = 0;
    SetSource set;
    std::string equation;
    std::size_t max_dim = 1;
    std::size_t min_size = 2;
    std::size_t max_steps = 64;
    bool coefficient_translates = true;
};
Report cmd_increment(const IncrementCommandConfig& config, const RunContext& ctx);

struct SidonConfig {
    Ambient ambient;
    SetSource set;
};
Report cmd_sidon(const SidonConfig& config, const RunContext& ctx);

/// Parses argv, runs one subcommand and writes the report.
/// Returns 0 on success, 2 on input errors, 3 on an internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ieq::harness
