#pragma once

/**
 * @file cyclic.hpp
 * @brief Exact arithmetic and set algebra in Z/pZ for prime p.
 *
 * Residues are canonical representatives in [0, p). Every set type keeps its
 * elements sorted and deduplicated, so two sets compare equal exactly when
 * they contain the same residues.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ieq {

using Residue = std::int64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

class PrimeCyclicGroup {
public:
    /// Throws InvalidArgument unless p is a prime >= 3.
    explicit PrimeCyclicGroup(std::int64_t p);

    std::int64_t order() const noexcept { return p_; }

    /// Canonical representative of any integer.
    Residue reduce(std::int64_t x) const noexcept {
        const std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept;
    Residue pow(Residue base, std::uint64_t exponent) const noexcept;
    /// Multiplicative inverse; throws InvalidArgument for a == 0 (mod p).
    Residue inverse(std::int64_t a) const;

    bool is_unit(std::int64_t a) const noexcept { return reduce(a) != 0; }

    friend bool operator==(const PrimeCyclicGroup&, const PrimeCyclicGroup&) = default;

private:
    std::int64_t p_;
};

/// A subset of Z/pZ.
class ResidueSet {
public:
    /// Elements must already lie in [0, p); duplicates are removed.
    ResidueSet(PrimeCyclicGroup group, std::vector<Residue> elements);

    /// Reduces arbitrary integers modulo p first.
    static ResidueSet from_integers(PrimeCyclicGroup group, std::span<const std::int64_t> values);
    static ResidueSet empty(PrimeCyclicGroup group);
    static ResidueSet full(PrimeCyclicGroup group);

    const PrimeCyclicGroup& group() const noexcept { return group_; }
    std::span<const Residue> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(Residue x) const noexcept;
    double density() const noexcept {
        return static_cast<double>(elements_.size()) / static_cast<double>(group_.order());
    }

    /// 0/1 vector of length p.
    std::vector<std::int64_t> indicator() const;

    bool is_subset_of(const ResidueSet& other) const;
    ResidueSet intersect(const ResidueSet& other) const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    PrimeCyclicGroup group_;
    std::vector<Residue> elements_;
};

/// A subset of the integer interval {1, ..., N}.
class IntervalSet {
public:
    IntervalSet(std::int64_t length, std::vector<std::int64_t> elements);

    std::int64_t length() const noexcept { return length_; }
    std::span<const std::int64_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(std::int64_t x) const noexcept;
    double density() const noexcept {
        return static_cast<double>(elements_.size()) / static_cast<double>(length_);
    }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::int64_t length_;
    std::vector<std::int64_t> elements_;
};

class InvariantEquation;

struct Embedding {
    PrimeCyclicGroup group;
    ResidueSet set;
};

/// Embeds A into Z/pZ for the smallest prime p > (sum |a_i|) * N, so that no
/// solution of the equation can wrap around.
Embedding embed_interval(const IntervalSet& a, const InvariantEquation& eq);

/// {a * x : x in A}; throws InvalidArgument("degenerate dilation") when a == 0 mod p.
ResidueSet dilate_set(const ResidueSet& a, std::int64_t factor);
ResidueSet translate_set(const ResidueSet& a, std::int64_t shift);
ResidueSet negate_set(const ResidueSet& a);
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
ResidueSet difference_set(const ResidueSet& a, const ResidueSet& b);
/// A + A + ... + A with w summands; throws InvalidArgument for w < 1.
ResidueSet iterated_sumset(const ResidueSet& a, std::int64_t w);

}  // namespace ieq
