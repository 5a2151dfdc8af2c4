#include "ieq/harness/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>

#include "ieq/behrend.hpp"
#include "ieq/bohr.hpp"
#include "ieq/equations.hpp"
#include "ieq/error.hpp"
#include "ieq/fourier.hpp"
#include "ieq/increment.hpp"
#include "ieq/invariant_equation.hpp"
#include "ieq/periodicity.hpp"

namespace ieq::harness {

namespace {

Json to_json(std::span<const std::int64_t> values) { return Json(std::vector<std::int64_t>(values.begin(), values.end())); }

TrivialityPredicate parse_trivial(const std::string& name) {
    if (name == "all_equal") return TrivialityPredicate::AllEqual;
    if (name == "sidon") return TrivialityPredicate::SidonMultiset;
    throw InvalidArgument("unknown triviality predicate: " + name);
}

double parse_norm(const std::string& text) {
    if (text == "inf") return kInfinityNorm;
    std::size_t used = 0;
    double q = 0.0;
    try {
        q = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size()) throw InvalidArgument("norm must be a real q >= 1 or 'inf': " + text);
    return q;
}

// Resolves which ambient a set lives in; a Behrend generator implies N when none is given.
Ambient resolve_ambient(const Ambient& ambient, const SetSource& src) {
    if (ambient.p && ambient.n) throw InvalidArgument("give --p or --N, not both");
    if (ambient.p || ambient.n) return ambient;
    if (src.behrend) {
        const auto v = parse_int_list(*src.behrend);
        if (v.size() != 4) throw InvalidArgument("--behrend-set expects M,d,dprime,k");
        BehrendParams params{v[0], v[1], v[2], v[3]};
        params.validate();
        return Ambient{std::nullopt, params.universe()};
    }
    throw InvalidArgument("give --p for Z/pZ or --N for {1..N}");
}

void fill_count(Report& r, const SolutionCount& c, std::int64_t ambient_size, std::size_t arity) {
    r.fields["total"] = c.total;
    r.fields["trivial"] = c.trivial;
    r.fields["nontrivial"] = c.nontrivial();
    r.fields["normalized_total"] =
        number(static_cast<double>(c.total) / std::pow(static_cast<double>(ambient_size), static_cast<double>(arity - 1)));
}

bool bohr_member_direct(std::int64_t p, std::span<const Residue> gamma, double width, Residue x) {
    for (Residue t : gamma) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>((t * x) % p) / static_cast<double>(p);
        if (std::abs(1.0 - std::polar(1.0, theta)) > width + kBohrMembershipTolerance) return false;
    }
    return true;
}

}  // namespace

Report cmd_count(const CountConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "count";
    const InvariantEquation eq(parse_int_list(config.equation));
    const auto pred = parse_trivial(config.trivial);
    if (config.method != "fast" && config.method != "bruteforce") throw InvalidArgument("method must be fast or bruteforce");
    const auto ambient = resolve_ambient(config.ambient, config.set);
    const bool fast_first = config.method == "fast";

    SolutionCount primary, other;
    std::int64_t ambient_size = 0;
    std::size_t size = 0;
    if (ambient.p) {
        const auto a = resolve_residue_set(config.set, *ambient.p, ctx.seed);
        ambient_size = *ambient.p;
        size = a.size();
        r.fields["ambient"] = "Z/pZ";
        r.fields["p"] = ambient_size;
        primary = fast_first ? count_solutions_fast(a, eq, pred) : count_solutions_bruteforce(a, eq, pred);
        if (ctx.both) other = fast_first ? count_solutions_bruteforce(a, eq, pred) : count_solutions_fast(a, eq, pred);
    } else {
        const auto a = resolve_interval_set(config.set, *ambient.n, ctx.seed);
        ambient_size = *ambient.n;
        size = a.size();
        r.fields["ambient"] = "integers";
        r.fields["N"] = ambient_size;
        primary = fast_first ? count_solutions_fast(a, eq, pred) : count_solutions_bruteforce(a, eq, pred);
        if (ctx.both) other = fast_first ? count_solutions_bruteforce(a, eq, pred) : count_solutions_fast(a, eq, pred);
    }
    r.fields["equation"] = eq.to_string();
    r.fields["size"] = size;
    r.fields["alpha"] = number(static_cast<double>(size) / static_cast<double>(ambient_size));
    fill_count(r, primary, ambient_size, eq.arity());
    r.fields["method"] = config.method;
    if (ctx.both) r.fields["agreement"] = primary == other;
    return r;
}

Report cmd_behrend(const BehrendConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "behrend";
    BehrendParams params;
    std::optional<ChosenParams> chosen;
    if (config.alpha) {
        if (config.base || config.constrained || config.free_digits) {
            throw InvalidArgument("give either --alpha or --M/--d/--dprime, not both");
        }
        chosen = choose_params(*config.alpha, config.arity, ChooseOptions{config.c});
        params = chosen->params;
    } else {
        if (!config.base || !config.constrained || !config.free_digits) {
            throw InvalidArgument("behrend needs --M, --d and --dprime, or --alpha");
        }
        params = BehrendParams{*config.base, *config.constrained, *config.free_digits, config.arity};
    }
    const auto out = build_behrend(params);
    const auto ver = verify_behrend(out, params);
    const double density = static_cast<double>(out.members.size()) / static_cast<double>(out.universe);

    r.fields["M"] = params.base;
    r.fields["d"] = params.constrained;
    r.fields["dprime"] = params.free_digits;
    r.fields["k"] = params.arity;
    if (chosen) {
        r.fields["alpha_target"] = number(*config.alpha);
        r.fields["predicted_density"] = number(chosen->predicted_density);
    }
    r.fields["N"] = out.universe;
    r.fields["size"] = out.members.size();
    r.fields["density"] = number(density);
    r.fields["radius"] = out.radius;
    r.fields["t_size"] = out.t_size;
    r.fields["count"] = ver.count;
    r.fields["diagonal_count"] = ver.diagonal_count;
    r.fields["bound"] = ver.bound;
    r.fields["diagonal_ok"] = ver.diagonal_ok;
    r.fields["within_bound"] = ver.within_bound;
    const double log_term = std::log(2.0 / density);
    r.fields["reference_count"] = number(std::exp(-config.c * log_term * log_term) *
                                         std::pow(static_cast<double>(out.universe), static_cast<double>(params.arity - 1)));
    if (ctx.both) {
        const double work = std::pow(static_cast<double>(out.members.size()), static_cast<double>(params.arity - 1));
        if (work > 5e7) {
            r.fields["agreement"] = "skipped";
        } else {
            const auto brute = count_solutions_bruteforce(out.as_interval_set(), InvariantEquation::convex(params.arity));
            r.fields["agreement"] = brute.total == ver.count;
        }
    }
    if (config.set_out) {
        std::ofstream f(*config.set_out);
        if (!f) throw InvalidArgument("cannot write set file: " + *config.set_out);
        const auto members = out.as_interval_set();
        for (auto x : members.elements()) f << x << '\n';
        r.fields["set_file"] = *config.set_out;
    }
    return r;
}

Report cmd_bohr(const BohrConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "bohr";
    const PrimeCyclicGroup g(config.p);
    BohrSet b(g, parse_int_list(config.gamma), config.rho);
    if (config.delta) b = dilate(b, *config.delta);
    if (config.scale) b = scale(b, *config.scale);
    const auto members = enumerate(b);

    r.fields["p"] = config.p;
    r.fields["gamma"] = to_json(b.frequencies());
    r.fields["width"] = number(b.width());
    r.fields["dimension"] = b.dimension();
    r.fields["clamped"] = b.clamped();
    r.fields["size"] = members.size();
    if (config.enumerate) r.fields["members"] = to_json(members.elements());
    if (config.regularity) {
        const auto rep = is_regular(b);
        r.fields["regular"] = rep.is_regular;
        r.fields["worst_ratio_violation"] = number(rep.worst_ratio_violation);
        r.fields["critical_deltas_checked"] = rep.critical_deltas_checked;
    }
    if (config.find_regular) {
        const double delta = find_regular_dilate(b);
        r.fields["regular_delta"] = number(delta);
        r.fields["regular_size"] = enumerate(dilate(b, delta)).size();
    }
    if (ctx.both) {
        std::vector<Residue> direct;
        for (Residue x = 0; x < config.p; ++x) {
            if (bohr_member_direct(config.p, b.frequencies(), b.width(), x)) direct.push_back(x);
        }
        r.fields["agreement"] = ResidueSet(g, direct) == members;
    }
    return r;
}

Report cmd_spectrum(const SpectrumConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "spectrum";
    const auto x = resolve_residue_set(config.set, config.p, ctx.seed);
    const auto spec = spectrum(x, config.delta);
    r.fields["p"] = config.p;
    r.fields["size"] = x.size();
    r.fields["delta"] = number(config.delta);
    r.fields["threshold"] = number(spec.threshold);
    r.fields["count"] = spec.frequencies.size();
    r.fields["frequencies"] = to_json(spec.frequencies.elements());
    if (ctx.both) r.fields["agreement"] = spectrum_direct(x, config.delta).frequencies == spec.frequencies;
    return r;
}

Report cmd_periods(const PeriodsConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "periods";
    const PrimeCyclicGroup g(config.p);
    const ResidueSet a(g, parse_int_list(config.a));
    const ResidueSet l(g, parse_int_list(config.l));
    const double q = parse_norm(config.norm);
    const auto ap = almost_periods(a, l, config.epsilon, q);
    r.fields["p"] = config.p;
    r.fields["epsilon"] = number(ap.epsilon);
    r.fields["norm"] = std::isinf(q) ? Json("inf") : number(q);
    r.fields["bound"] = number(ap.bound);
    r.fields["count"] = ap.periods.size();
    r.fields["periods"] = to_json(ap.periods.elements());
    if (ctx.both) {
        // Shift-by-shift re-evaluation against the stated bound.
        const std::vector<ResidueSet> pair{a, l};
        const auto f = GroupFunction::from_counts(g, convolve_indicators(pair));
        std::vector<Residue> direct;
        for (Residue t = 0; t < config.p; ++t) {
            if (shift_deviation(f, t, q) <= ap.bound * (1.0 + kPeriodTolerance)) direct.push_back(t);
        }
        r.fields["agreement"] = ResidueSet(g, direct) == ap.periods;
    }
    return r;
}

Report cmd_increment(const IncrementCommandConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "increment";
    const auto a = resolve_residue_set(config.set, config.p, ctx.seed);
    const InvariantEquation eq(parse_int_list(config.equation));
    IncrementConfig ic;
    ic.max_dim = config.max_dim;
    ic.min_size = config.min_size;
    ic.max_steps = config.max_steps;
    ic.seed = ctx.seed;
    ic.use_coefficient_translates = config.coefficient_translates;
    const auto trace = increment_driver(a, eq, ic);

    r.fields["p"] = config.p;
    r.fields["equation"] = eq.to_string();
    r.fields["size"] = a.size();
    r.fields["max_dim"] = config.max_dim;
    r.fields["min_size"] = config.min_size;
    r.fields["max_steps"] = config.max_steps;
    r.fields["increment_factor"] = number(trace.increment_factor);
    r.fields["increments"] = trace.steps.size() - 1;
    r.fields["terminal_reason"] = std::string(to_string(trace.terminal_reason));
    r.fields["final_alpha"] = number(trace.steps.back().alpha);

    r.table_name = "steps";
    r.columns = {"i", "alpha", "bohr_size", "dim", "width", "mechanism", "translate", "set_size"};
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        r.rows.push_back({Json(i), number(s.alpha), Json(s.bohr_size), Json(s.bohr.dimension()), number(s.bohr.width()),
                          Json(std::string(to_string(s.mechanism))), Json(s.translate), Json(s.set.size())});
    }
    if (ctx.both) {
        // Recount every step from scratch: members of B, translate, intersection, ratio.
        bool ok = true;
        for (std::size_t i = 1; i < trace.steps.size(); ++i) {
            const auto& prev = trace.steps[i - 1];
            const auto& s = trace.steps[i];
            const auto members = enumerate(s.bohr);
            const auto next = translate_set(prev.set, -s.translate).intersect(members);
            const double alpha = static_cast<double>(next.size()) / static_cast<double>(members.size());
            ok = ok && next == s.set && members.size() == s.bohr_size && alpha >= trace.increment_factor * prev.alpha;
        }
        r.fields["agreement"] = ok;
    }
    return r;
}

Report cmd_sidon(const SidonConfig& config, const RunContext& ctx) {
    Report r;
    r.command = "sidon";
    bool fast = false, brute = false;
    std::size_t size = 0;
    if (config.ambient.p) {
        if (config.ambient.n) throw InvalidArgument("give --p or --N, not both");
        const auto s = resolve_residue_set(config.set, *config.ambient.p, ctx.seed);
        size = s.size();
        r.fields["ambient"] = "Z/pZ";
        r.fields["p"] = *config.ambient.p;
        fast = is_sidon(s);
        if (ctx.both) brute = is_sidon_bruteforce(s);
    } else {
        std::int64_t n = 0;
        if (config.ambient.n) {
            n = *config.ambient.n;
        } else if (config.set.inline_list || config.set.file) {
            const auto values = config.set.inline_list ? parse_int_list(*config.set.inline_list) : read_set_file(*config.set.file);
            n = values.empty() ? 1 : std::max<std::int64_t>(1, *std::max_element(values.begin(), values.end()));
        } else {
            n = resolve_ambient(config.ambient, config.set).n.value();
        }
        const auto s = resolve_interval_set(config.set, n, ctx.seed);
        size = s.size();
        r.fields["ambient"] = "integers";
        r.fields["N"] = n;
        fast = is_sidon(s);
        if (ctx.both) brute = is_sidon_bruteforce(s);
    }
    r.fields["size"] = size;
    r.fields["is_sidon"] = fast;
    if (ctx.both) r.fields["agreement"] = fast == brute;
    return r;
}

}  // namespace ieq::harness
