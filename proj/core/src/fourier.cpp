#include "ieq/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "ieq/error.hpp"

namespace ieq {

__extension__ using wide_int = __int128;

namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex, FftwFree>;

class Transform {
public:
    Transform(std::size_t n, int sign)
        : n_(n),
          in_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))),
          out_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_.get(), out_.get(), sign, FFTW_ESTIMATE);
    }
    ~Transform() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;

    std::vector<Complex> run(std::span<const Complex> input) {
        for (std::size_t i = 0; i < n_; ++i) {
            in_.get()[i][0] = input[i].real();
            in_.get()[i][1] = input[i].imag();
        }
        fftw_execute(plan_);
        std::vector<Complex> result(n_);
        for (std::size_t i = 0; i < n_; ++i) result[i] = {out_.get()[i][0], out_.get()[i][1]};
        return result;
    }

private:
    std::size_t n_;
    FftwBuffer in_;
    FftwBuffer out_;
    fftw_plan plan_;
};

std::vector<Complex> forward(std::span<const Complex> input) { return Transform(input.size(), FFTW_FORWARD).run(input); }

std::vector<Complex> backward_normalized(std::span<const Complex> input) {
    auto out = Transform(input.size(), FFTW_BACKWARD).run(input);
    const double n = static_cast<double>(input.size());
    for (auto& z : out) z /= n;
    return out;
}

template <typename T>
std::vector<Complex> to_complex(std::span<const T> values) {
    std::vector<Complex> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = {static_cast<double>(values[i]), 0.0};
    return out;
}

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) throw InvalidArgument("convolution operands have different lengths");
    if (a == 0) throw InvalidArgument("convolution of empty vectors");
}

wide_int abs_sum(std::span<const std::int64_t> v) {
    wide_int s = 0;
    for (auto x : v) s += x < 0 ? -static_cast<wide_int>(x) : x;
    return s;
}

constexpr double kMaxTransformMagnitude = 1125899906842624.0;  // 2^50

}  // namespace

GroupFunction::GroupFunction(PrimeCyclicGroup group, std::vector<double> values)
    : group_(group), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(group_.order())) {
        throw InvalidArgument("function has " + std::to_string(values_.size()) + " values, expected " +
                              std::to_string(group_.order()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvalidArgument("function values must be finite");
    }
}

GroupFunction GroupFunction::zero(PrimeCyclicGroup group) { return constant(group, 0.0); }

GroupFunction GroupFunction::constant(PrimeCyclicGroup group, double c) {
    return GroupFunction(group, std::vector<double>(static_cast<std::size_t>(group.order()), c));
}

GroupFunction GroupFunction::indicator(const ResidueSet& a) {
    std::vector<double> v(static_cast<std::size_t>(a.group().order()), 0.0);
    for (Residue x : a.elements()) v[static_cast<std::size_t>(x)] = 1.0;
    return GroupFunction(a.group(), std::move(v));
}

GroupFunction GroupFunction::from_counts(PrimeCyclicGroup group, std::span<const std::int64_t> counts) {
    std::vector<double> v(counts.begin(), counts.end());
    return GroupFunction(group, std::move(v));
}

bool GroupFunction::is_integer_valued() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::abs(v) < 9007199254740992.0 && std::nearbyint(v) == v; });
}

GroupFunction GroupFunction::shifted(std::int64_t t) const {
    const auto p = values_.size();
    const auto s = static_cast<std::size_t>(group_.reduce(t));
    std::vector<double> out(p);
    for (std::size_t x = 0; x < p; ++x) {
        std::size_t y = x + s;
        if (y >= p) y -= p;
        out[x] = values_[y];
    }
    return GroupFunction(group_, std::move(out));
}

GroupFunction GroupFunction::scaled(double factor) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= factor;
    return GroupFunction(group_, std::move(out));
}

GroupFunction operator-(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group() == g.group())) throw InvalidArgument("functions live in different groups");
    std::vector<double> out(f.values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= g.values_[i];
    return GroupFunction(f.group(), std::move(out));
}

FourierCoefficients::FourierCoefficients(PrimeCyclicGroup group, std::vector<Complex> values)
    : group_(group), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(group_.order())) {
        throw InvalidArgument("coefficient vector has the wrong length");
    }
}

FourierCoefficients dft(const GroupFunction& f) {
    return FourierCoefficients(f.group(), forward(to_complex(f.values())));
}

GroupFunction inverse_dft(const FourierCoefficients& coefficients) {
    const auto z = backward_normalized(coefficients.values());
    std::vector<double> real(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) real[i] = z[i].real();
    return GroupFunction(coefficients.group(), std::move(real));
}

std::vector<std::int64_t> direct_convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    require_same_length(a.size(), b.size());
    const wide_int bound = abs_sum(a) * abs_sum(b);
    if (bound > static_cast<wide_int>(std::numeric_limits<std::int64_t>::max())) {
        throw InvalidArgument("exact convolution would overflow 64-bit integers");
    }
    const auto p = a.size();
    std::vector<std::int64_t> out(p, 0);
    for (std::size_t t = 0; t < p; ++t) {
        const std::int64_t at = a[t];
        if (at == 0) continue;
        // out[x] += a[t] b[x - t]
        for (std::size_t j = 0; j < p; ++j) {
            std::size_t x = t + j;
            if (x >= p) x -= p;
            out[x] += at * b[j];
        }
    }
    return out;
}

std::vector<std::int64_t> fft_convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    require_same_length(a.size(), b.size());
    const wide_int bound = abs_sum(a) * abs_sum(b);
    if (static_cast<double>(bound) > kMaxTransformMagnitude) {
        throw PrecisionError("precision: output magnitude exceeds the safe transform range");
    }
    auto fa = forward(to_complex(a));
    const auto fb = forward(to_complex(b));
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    const auto raw = backward_normalized(fa);

    std::vector<std::int64_t> out(raw.size());
    wide_int total = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double v = raw[i].real();
        const double r = std::nearbyint(v);
        if (std::abs(v - r) >= 0.1) {
            throw PrecisionError("precision: rounding residual " + std::to_string(std::abs(v - r)) + " at index " +
                                 std::to_string(i));
        }
        out[i] = static_cast<std::int64_t>(r);
        total += out[i];
    }
    // Total mass of a convolution is the product of the masses.
    wide_int sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    if (total != sa * sb) throw PrecisionError("precision: convolution mass mismatch");
    return out;
}

std::vector<std::int64_t> convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    try {
        return fft_convolve_counts(a, b);
    } catch (const PrecisionError&) {
        return direct_convolve_counts(a, b);
    }
}

std::vector<std::int64_t> convolve_indicators(std::span<const ResidueSet> sets) {
    if (sets.empty()) throw InvalidArgument("need at least one set to convolve");
    std::vector<std::int64_t> acc = sets.front().indicator();
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (!(sets[i].group() == sets.front().group())) throw InvalidArgument("sets live in different groups");
        acc = convolve_counts(acc, sets[i].indicator());
    }
    return acc;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group() == g.group())) throw InvalidArgument("functions live in different groups");
    if (f.is_integer_valued() && g.is_integer_valued()) {
        std::vector<std::int64_t> a(f.size()), b(g.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = static_cast<std::int64_t>(f.values()[i]);
            b[i] = static_cast<std::int64_t>(g.values()[i]);
        }
        if (abs_sum(a) * abs_sum(b) <= static_cast<wide_int>(std::numeric_limits<std::int64_t>::max())) {
            return GroupFunction::from_counts(f.group(), convolve_counts(a, b));
        }
    }
    auto ff = forward(to_complex(f.values()));
    const auto fg = forward(to_complex(g.values()));
    for (std::size_t i = 0; i < ff.size(); ++i) ff[i] *= fg[i];
    const auto z = backward_normalized(ff);
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i].real();
    return GroupFunction(f.group(), std::move(out));
}

GroupFunction multi_convolve(const GroupFunction& f, std::int64_t k) {
    if (k < 1) throw InvalidArgument("multi_convolve needs k >= 1");
    GroupFunction acc = f;
    for (std::int64_t i = 1; i < k; ++i) acc = convolve(acc, f);
    return acc;
}

double lp_norm(std::span<const double> values, double q) {
    if (std::isnan(q) || q < 1.0) throw InvalidArgument("L_q norm needs q >= 1");
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    if (q == 1.0) {
        double s = 0.0;
        for (double v : values) s += std::abs(v);
        return s;
    }
    double s = 0.0;
    for (double v : values) s += std::pow(std::abs(v), q);
    return std::pow(s, 1.0 / q);
}

double lp_norm(const GroupFunction& f, double q) { return lp_norm(f.values(), q); }

double expectation(const GroupFunction& f) {
    double s = 0.0;
    for (double v : f.values()) s += v;
    return s / static_cast<double>(f.size());
}

GroupFunction normalized_indicator(const ResidueSet& a) {
    if (a.empty()) throw InvalidArgument("normalized indicator of an empty set");
    return GroupFunction::indicator(a).scaled(1.0 / static_cast<double>(a.size()));
}

namespace {

void check_spectrum_args(const ResidueSet& x, double delta) {
    if (x.empty()) throw InvalidArgument("spectrum of an empty set");
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("spectrum threshold must lie in (0, 1]");
}

Spectrum select_frequencies(const ResidueSet& x, double delta, std::span<const double> magnitudes) {
    const double size = static_cast<double>(x.size());
    const double cutoff = delta * size - 1e-9 * size;
    std::vector<Residue> freq;
    for (std::size_t t = 0; t < magnitudes.size(); ++t) {
        if (magnitudes[t] >= cutoff) freq.push_back(static_cast<Residue>(t));
    }
    return {delta, ResidueSet(x.group(), std::move(freq))};
}

}  // namespace

Spectrum spectrum(const ResidueSet& x, double delta) {
    check_spectrum_args(x, delta);
    const auto coeffs = dft(GroupFunction::indicator(x));
    std::vector<double> mags(coeffs.size());
    for (std::size_t t = 0; t < mags.size(); ++t) mags[t] = std::abs(coeffs[t]);
    return select_frequencies(x, delta, mags);
}

Spectrum spectrum_direct(const ResidueSet& x, double delta) {
    check_spectrum_args(x, delta);
    const auto& g = x.group();
    const auto p = static_cast<std::size_t>(g.order());
    std::vector<double> mags(p);
    for (std::size_t t = 0; t < p; ++t) {
        Complex s{0.0, 0.0};
        for (Residue e : x.elements()) {
            const auto phase = static_cast<double>(g.mul(static_cast<Residue>(t), e));
            const double theta = -2.0 * std::numbers::pi * phase / static_cast<double>(p);
            s += Complex{std::cos(theta), std::sin(theta)};
        }
        mags[t] = std::abs(s);
    }
    return select_frequencies(x, delta, mags);
}

}  // namespace ieq
