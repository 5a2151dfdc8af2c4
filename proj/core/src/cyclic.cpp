#include "ieq/cyclic.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ieq/error.hpp"
#include "ieq/invariant_equation.hpp"

namespace ieq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exponent, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

void canonicalize(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_same_group(const ResidueSet& a, const ResidueSet& b) {
    if (!(a.group() == b.group())) throw InvalidArgument("sets live in different groups");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    // This witness set is exact below 3.3e24.
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) return n == w;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 w : witnesses) {
        u64 x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    u64 candidate = n + 1;
    while (!is_prime(candidate)) ++candidate;
    return candidate;
}

PrimeCyclicGroup::PrimeCyclicGroup(std::int64_t p) : p_(p) {
    if (p < 3) throw InvalidArgument("modulus must be a prime >= 3, got " + std::to_string(p));
    if (!is_prime(static_cast<u64>(p))) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeCyclicGroup::mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(mulmod(static_cast<u64>(reduce(a)), static_cast<u64>(reduce(b)),
                                       static_cast<u64>(p_)));
}

Residue PrimeCyclicGroup::pow(Residue base, std::uint64_t exponent) const noexcept {
    return static_cast<Residue>(powmod(static_cast<u64>(reduce(base)), exponent, static_cast<u64>(p_)));
}

Residue PrimeCyclicGroup::inverse(std::int64_t a) const {
    const Residue r = reduce(a);
    if (r == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(p_));
    return pow(r, static_cast<u64>(p_ - 2));
}

ResidueSet::ResidueSet(PrimeCyclicGroup group, std::vector<Residue> elements)
    : group_(group), elements_(std::move(elements)) {
    for (Residue x : elements_) {
        if (x < 0 || x >= group_.order()) {
            throw InvalidArgument("residue " + std::to_string(x) + " outside [0, " +
                                  std::to_string(group_.order()) + ")");
        }
    }
    canonicalize(elements_);
}

ResidueSet ResidueSet::from_integers(PrimeCyclicGroup group, std::span<const std::int64_t> values) {
    std::vector<Residue> reduced;
    reduced.reserve(values.size());
    for (std::int64_t v : values) reduced.push_back(group.reduce(v));
    return ResidueSet(group, std::move(reduced));
}

ResidueSet ResidueSet::empty(PrimeCyclicGroup group) { return ResidueSet(group, {}); }

ResidueSet ResidueSet::full(PrimeCyclicGroup group) {
    std::vector<Residue> all(static_cast<std::size_t>(group.order()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Residue>(i);
    return ResidueSet(group, std::move(all));
}

bool ResidueSet::contains(Residue x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::vector<std::int64_t> ResidueSet::indicator() const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(group_.order()), 0);
    for (Residue x : elements_) v[static_cast<std::size_t>(x)] = 1;
    return v;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
    require_same_group(*this, other);
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

ResidueSet ResidueSet::intersect(const ResidueSet& other) const {
    require_same_group(*this, other);
    std::vector<Residue> out;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
                          std::back_inserter(out));
    return ResidueSet(group_, std::move(out));
}

IntervalSet::IntervalSet(std::int64_t length, std::vector<std::int64_t> elements)
    : length_(length), elements_(std::move(elements)) {
    if (length_ < 1) throw InvalidArgument("interval length must be positive");
    for (std::int64_t x : elements_) {
        if (x < 1 || x > length_) {
            throw InvalidArgument("element " + std::to_string(x) + " outside [1, " + std::to_string(length_) + "]");
        }
    }
    canonicalize(elements_);
}

bool IntervalSet::contains(std::int64_t x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

Embedding embed_interval(const IntervalSet& a, const InvariantEquation& eq) {
    if (a.empty()) throw InvalidArgument("cannot embed an empty set");
    const u128 bound = static_cast<u128>(static_cast<u64>(eq.l1_norm())) * static_cast<u64>(a.length());
    if (bound >= (static_cast<u128>(1) << 62)) throw InvalidArgument("embedding modulus overflows");
    const PrimeCyclicGroup group(static_cast<std::int64_t>(next_prime_above(static_cast<u64>(bound))));
    std::vector<Residue> image(a.elements().begin(), a.elements().end());
    return {group, ResidueSet(group, std::move(image))};
}

ResidueSet dilate_set(const ResidueSet& a, std::int64_t factor) {
    const auto& g = a.group();
    const Residue f = g.reduce(factor);
    if (f == 0) throw InvalidArgument("degenerate dilation");
    std::vector<Residue> out;
    out.reserve(a.size());
    for (Residue x : a.elements()) out.push_back(g.mul(x, f));
    return ResidueSet(g, std::move(out));
}

ResidueSet translate_set(const ResidueSet& a, std::int64_t shift) {
    const auto& g = a.group();
    const Residue s = g.reduce(shift);
    std::vector<Residue> out;
    out.reserve(a.size());
    for (Residue x : a.elements()) out.push_back(g.add(x, s));
    return ResidueSet(g, std::move(out));
}

ResidueSet negate_set(const ResidueSet& a) { return dilate_set(a, -1); }

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
    require_same_group(a, b);
    const auto& g = a.group();
    const auto p = static_cast<std::size_t>(g.order());
    std::vector<char> hit(p, 0);
    std::size_t filled = 0;
    for (Residue x : a.elements()) {
        for (Residue y : b.elements()) {
            auto s = static_cast<std::size_t>(x + y);
            if (s >= p) s -= p;
            if (!hit[s]) {
                hit[s] = 1;
                if (++filled == p) return ResidueSet::full(g);
            }
        }
    }
    std::vector<Residue> out;
    out.reserve(filled);
    for (std::size_t i = 0; i < p; ++i) {
        if (hit[i]) out.push_back(static_cast<Residue>(i));
    }
    return ResidueSet(g, std::move(out));
}

ResidueSet difference_set(const ResidueSet& a, const ResidueSet& b) { return sumset(a, negate_set(b)); }

ResidueSet iterated_sumset(const ResidueSet& a, std::int64_t w) {
    if (w < 1) throw InvalidArgument("iterated sumset needs at least one summand");
    // Binary powering; the sumset operation is associative and commutative.
    ResidueSet result = ResidueSet::empty(a.group());
    bool have_result = false;
    ResidueSet power = a;
    while (w > 0) {
        if (w & 1) {
            result = have_result ? sumset(result, power) : power;
            have_result = true;
        }
        w >>= 1;
        if (w > 0) power = sumset(power, power);
    }
    return result;
}

}  // namespace ieq
