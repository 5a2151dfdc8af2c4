#pragma once

/**
 * @file fourier.hpp
 * @brief Discrete Fourier analysis on Z/pZ.
 *
 * Conventions used everywhere in the library:
 *   character      gamma_t(x) = exp(2 pi i t x / p)
 *   transform      f^(t)      = sum_x f(x) exp(-2 pi i t x / p)
 *   inversion      f(x)       = (1/p) sum_t f^(t) exp(2 pi i t x / p)
 *   convolution    (f*g)(x)   = sum_t f(t) g(x - t)
 */

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ieq/cyclic.hpp"

namespace ieq {

using Complex = std::complex<double>;

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// A real-valued function on Z/pZ.
class GroupFunction {
public:
    GroupFunction(PrimeCyclicGroup group, std::vector<double> values);

    static GroupFunction zero(PrimeCyclicGroup group);
    static GroupFunction constant(PrimeCyclicGroup group, double c);
    static GroupFunction indicator(const ResidueSet& a);
    static GroupFunction from_counts(PrimeCyclicGroup group, std::span<const std::int64_t> counts);

    const PrimeCyclicGroup& group() const noexcept { return group_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator()(std::int64_t x) const noexcept {
        return values_[static_cast<std::size_t>(group_.reduce(x))];
    }

    /// True when every value is an integer of magnitude below 2^53.
    bool is_integer_valued() const noexcept;
    /// x -> f(x + t)
    GroupFunction shifted(std::int64_t t) const;
    GroupFunction scaled(double factor) const;

    friend GroupFunction operator-(const GroupFunction& f, const GroupFunction& g);

private:
    PrimeCyclicGroup group_;
    std::vector<double> values_;
};

class FourierCoefficients {
public:
    FourierCoefficients(PrimeCyclicGroup group, std::vector<Complex> values);

    const PrimeCyclicGroup& group() const noexcept { return group_; }
    std::span<const Complex> values() const noexcept { return values_; }
    const Complex& operator[](std::size_t t) const { return values_.at(t); }
    std::size_t size() const noexcept { return values_.size(); }

private:
    PrimeCyclicGroup group_;
    std::vector<Complex> values_;
};

FourierCoefficients dft(const GroupFunction& f);
/// Real part of the inverse transform.
GroupFunction inverse_dft(const FourierCoefficients& coefficients);

/// Floating cyclic convolution; integer-valued inputs are routed through the
/// exact path so the result is integer-exact.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
/// f * f * ... * f with k copies.
GroupFunction multi_convolve(const GroupFunction& f, std::int64_t k);

/// Exact cyclic convolution of integer vectors of equal length. Tries the
/// floating transform first and falls back to direct summation when the
/// rounding check fails.
std::vector<std::int64_t> convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
/// Transform-based path only; throws PrecisionError when any entry lands
/// 0.1 or further from an integer, or when the output could exceed 2^50.
std::vector<std::int64_t> fft_convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
/// Schoolbook O(p * nnz) convolution in 64-bit integers.
std::vector<std::int64_t> direct_convolve_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
/// 1_{A_1} * ... * 1_{A_n}, exactly.
std::vector<std::int64_t> convolve_indicators(std::span<const ResidueSet> sets);

/// (sum |f|^q)^(1/q), or max |f| for q = kInfinityNorm. Throws for q < 1.
double lp_norm(const GroupFunction& f, double q);
double lp_norm(std::span<const double> values, double q);
double expectation(const GroupFunction& f);
/// 1_A / |A|; throws for empty A.
GroupFunction normalized_indicator(const ResidueSet& a);

struct Spectrum {
    double threshold;
    ResidueSet frequencies;
};

/// {t : |1_X^(t)| >= delta |X|}, boundary ties within 1e-9 |X| included.
Spectrum spectrum(const ResidueSet& x, double delta);
/// Same set computed from direct character sums in O(p |X|).
Spectrum spectrum_direct(const ResidueSet& x, double delta);

}  // namespace ieq
