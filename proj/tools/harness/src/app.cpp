#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "ieq/error.hpp"
#include "ieq/harness/commands.hpp"

namespace ieq::harness {

namespace {

void add_set_options(CLI::App* sub, SetSource& src) {
    sub->add_option("--set", src.inline_list, "Comma-separated elements");
    sub->add_option("--set-file", src.file, "File with one nonnegative integer per line");
    sub->add_flag("--full-group", src.full_group, "Every element of the ambient");
    sub->add_option("--random", src.random, "K distinct elements drawn with --seed");
    sub->add_option("--behrend-set", src.behrend, "Behrend set for M,d,dprime,k");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Experiments on invariant linear equations in cyclic groups"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    bool both = false;
    std::string out_path;
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "Seed for every randomized choice");
    app.add_flag("--both", both, "Also run the oracle and report agreement");
    app.add_option("--out", out_path, "Write the report to FILE");

    std::function<Report(const RunContext&)> action;

    CountConfig count;
    auto* c = app.add_subcommand("count", "Count solutions of an invariant equation in a set");
    c->add_option("--p", count.ambient.p, "Prime modulus");
    c->add_option("--N", count.ambient.n, "Interval length");
    c->add_option("--eq", count.equation, "Coefficients, e.g. 1,1,-2")->required();
    c->add_option("--trivial", count.trivial, "all_equal or sidon");
    c->add_option("--method", count.method, "fast or bruteforce");
    add_set_options(c, count.set);
    c->callback([&] { action = [&](const RunContext& ctx) { return cmd_count(count, ctx); }; });

    BehrendConfig behrend;
    auto* b = app.add_subcommand("behrend", "Build and verify a Behrend-type set");
    b->add_option("--M", behrend.base, "Digit base");
    b->add_option("--d", behrend.constrained, "Constrained digits");
    b->add_option("--dprime", behrend.free_digits, "Free digits");
    b->add_option("--alpha", behrend.alpha, "Target density; chooses M, d, dprime");
    b->add_option("--k", behrend.arity, "Arity of x_1 + ... + x_{k-1} = (k-1) x_k")->required();
    b->add_option("--c", behrend.c, "Constant used when choosing parameters");
    b->add_option("--set-out", behrend.set_out, "Write the set, one element of [1,N] per line");
    b->callback([&] { action = [&](const RunContext& ctx) { return cmd_behrend(behrend, ctx); }; });

    BohrConfig bohr;
    auto* h = app.add_subcommand("bohr", "Enumerate and inspect a Bohr set");
    h->add_option("--p", bohr.p, "Prime modulus")->required();
    h->add_option("--gamma", bohr.gamma, "Frequencies, comma-separated")->required();
    h->add_option("--rho", bohr.rho, "Width in (0,2]")->required();
    h->add_option("--delta", bohr.delta, "Dilate by delta first");
    h->add_option("--scale", bohr.scale, "Then scale by a unit a");
    h->add_flag("--enumerate", bohr.enumerate, "List the members");
    h->add_flag("--regular", bohr.regularity, "Run the exact regularity test");
    h->add_flag("--find-regular", bohr.find_regular, "Find delta in [1/2,1] with a regular dilate");
    h->callback([&] { action = [&](const RunContext& ctx) { return cmd_bohr(bohr, ctx); }; });

    SpectrumConfig spec;
    auto* s = app.add_subcommand("spectrum", "Large spectrum of an indicator");
    s->add_option("--p", spec.p, "Prime modulus")->required();
    s->add_option("--delta", spec.delta, "Threshold in (0,1]")->required();
    add_set_options(s, spec.set);
    s->callback([&] { action = [&](const RunContext& ctx) { return cmd_spectrum(spec, ctx); }; });

    PeriodsConfig periods;
    auto* pe = app.add_subcommand("periods", "Almost periods of 1_A * 1_L");
    pe->add_option("--p", periods.p, "Prime modulus")->required();
    pe->add_option("--A", periods.a, "Elements of A")->required();
    pe->add_option("--L", periods.l, "Elements of L")->required();
    pe->add_option("--eps", periods.epsilon, "Epsilon")->required();
    pe->add_option("--norm", periods.norm, "q >= 1 or inf");
    pe->callback([&] { action = [&](const RunContext& ctx) { return cmd_periods(periods, ctx); }; });

    IncrementCommandConfig inc;
    bool no_ct = false;
    auto* in = app.add_subcommand("increment", "Run the density-increment iteration");
    in->add_option("--p", inc.p, "Prime modulus")->required();
    in->add_option("--eq", inc.equation, "Coefficients, e.g. 1,1,1,-3")->required();
    in->add_option("--max-dim", inc.max_dim, "Largest Bohr dimension searched");
    in->add_option("--min-size", inc.min_size, "Smallest Bohr set allowed");
    in->add_option("--max-steps", inc.max_steps, "Increment budget");
    in->add_flag("--no-coefficient-translates", no_ct, "Use the direct search only");
    add_set_options(in, inc.set);
    in->callback([&] {
        inc.coefficient_translates = !no_ct;
        action = [&](const RunContext& ctx) { return cmd_increment(inc, ctx); };
    });

    SidonConfig sidon;
    auto* si = app.add_subcommand("sidon", "Check the Sidon property");
    si->add_option("--p", sidon.ambient.p, "Prime modulus");
    si->add_option("--N", sidon.ambient.n, "Interval length (default: largest element)");
    add_set_options(si, sidon.set);
    si->callback([&] { action = [&](const RunContext& ctx) { return cmd_sidon(sidon, ctx); }; });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Report report = action(RunContext{seed, both});
        const auto text = render(report, format == "csv" ? Format::Csv : Format::Json, seed);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw InvalidArgument("cannot write " + out_path);
            f << text;
        }
        return 0;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const PrecisionError& e) {
        err << "invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace ieq::harness
