#include <limits>
#include "ieq/equations.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ieq/error.hpp"
#include "ieq/fourier.hpp"

namespace ieq {

__extension__ using wide_int = __int128;

namespace {

void check_predicate(const InvariantEquation& eq, TrivialityPredicate pred) {
    if (pred == TrivialityPredicate::SidonMultiset && !(eq == InvariantEquation::sidon())) {
        throw InvalidArgument("the Sidon multiset predicate only applies to (1,1,-1,-1)");
    }
}

void check_units(const PrimeCyclicGroup& g, const InvariantEquation& eq) {
    for (std::int64_t a : eq.coefficients()) {
        if (!g.is_unit(a)) {
            throw InvalidArgument("coefficient degenerates mod p: " + std::to_string(a) + " is divisible by " +
                                  std::to_string(g.order()));
        }
    }
}

bool is_trivial(std::span<const std::int64_t> x, TrivialityPredicate pred) {
    if (pred == TrivialityPredicate::AllEqual) {
        return std::all_of(x.begin(), x.end(), [&](std::int64_t v) { return v == x[0]; });
    }
    return (x[0] == x[2] && x[1] == x[3]) || (x[0] == x[3] && x[1] == x[2]);
}

std::int64_t analytic_trivial(std::size_t n, TrivialityPredicate pred) {
    const auto m = static_cast<std::int64_t>(n);
    return pred == TrivialityPredicate::AllEqual ? m : 2 * m * m - m;
}

// Walks A^{k-1} in lexicographic order of indices, keeping the partial sums
// a_1 x_1 + ... + a_i x_i, and hands each completed tuple's last-variable
// candidate to `solve`. `visit` receives the full k-tuple whenever `solve`
// finds a solution; returning false stops the walk.
template <typename Solve, typename Visit>
void walk_tuples(std::span<const std::int64_t> elems, const InvariantEquation& eq, Solve&& solve, Visit&& visit,
                 bool modular, const PrimeCyclicGroup* g) {
    const std::size_t k = eq.arity();
    const std::size_t free = k - 1;
    const std::size_t n = elems.size();
    if (n == 0) return;
    std::vector<std::size_t> idx(free, 0);
    std::vector<std::int64_t> tuple(k, 0);
    std::vector<std::int64_t> partial(free + 1, 0);
    auto combine = [&](std::int64_t acc, std::size_t i, std::int64_t x) {
        return modular ? g->add(acc, g->mul(g->reduce(eq.coefficient(i)), x)) : acc + eq.coefficient(i) * x;
    };
    for (std::size_t i = 0; i < free; ++i) {
        tuple[i] = elems[0];
        partial[i + 1] = combine(partial[i], i, elems[0]);
    }
    while (true) {
        std::int64_t last = 0;
        if (solve(partial[free], last)) {
            tuple[free] = last;
            if (!visit(std::span<const std::int64_t>(tuple))) return;
        }
        std::size_t pos = free;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < n) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        for (std::size_t i = pos; i < free; ++i) {
            tuple[i] = elems[idx[i]];
            partial[i + 1] = combine(partial[i], i, tuple[i]);
        }
    }
}

template <typename Visit>
void walk_residue_solutions(const ResidueSet& a, const InvariantEquation& eq, Visit&& visit) {
    const auto& g = a.group();
    const Residue neg_inv_last = g.neg(g.inverse(eq.coefficient(eq.arity() - 1)));
    auto solve = [&](std::int64_t partial, std::int64_t& last) {
        last = g.mul(partial, neg_inv_last);
        return a.contains(last);
    };
    walk_tuples(a.elements(), eq, solve, visit, true, &g);
}

template <typename Visit>
void walk_integer_solutions(const IntervalSet& a, const InvariantEquation& eq, Visit&& visit) {
    const std::int64_t a_last = eq.coefficient(eq.arity() - 1);
    auto solve = [&](std::int64_t partial, std::int64_t& last) {
        if (partial % a_last != 0) return false;
        last = -partial / a_last;
        return a.contains(last);
    };
    walk_tuples(a.elements(), eq, solve, visit, false, nullptr);
}

template <typename Walk>
SolutionCount count_with(Walk&& walk, TrivialityPredicate pred) {
    SolutionCount c;
    walk([&](std::span<const std::int64_t> tuple) {
        ++c.total;
        if (is_trivial(tuple, pred)) ++c.trivial;
        return true;
    });
    return c;
}

template <typename Walk>
bool find_nontrivial(Walk&& walk, TrivialityPredicate pred) {
    bool found = false;
    walk([&](std::span<const std::int64_t> tuple) {
        if (!is_trivial(tuple, pred)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace

SolutionCount count_solutions_bruteforce(const ResidueSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    check_units(a.group(), eq);
    return count_with([&](auto&& visit) { walk_residue_solutions(a, eq, visit); }, pred);
}

SolutionCount count_solutions_bruteforce(const IntervalSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    return count_with([&](auto&& visit) { walk_integer_solutions(a, eq, visit); }, pred);
}

SolutionCount count_solutions_fast(const ResidueSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    check_units(a.group(), eq);
    if (a.empty()) return {};
    std::vector<ResidueSet> dilates;
    dilates.reserve(eq.arity());
    for (std::int64_t c : eq.coefficients()) dilates.push_back(dilate_set(a, c));
    // The k-fold convolution at 0 equals the (k-1)-fold one summed over -a_k A.
    // Pairing the last set exactly keeps transform magnitudes at |A|^(k-1).
    const auto last = dilates.back();
    dilates.pop_back();
    const auto conv = convolve_indicators(dilates);
    const auto& g = a.group();
    wide_int total = 0;
    for (auto x : last.elements()) total += conv[static_cast<std::size_t>(g.neg(x))];
    if (total > static_cast<wide_int>(std::numeric_limits<std::int64_t>::max())) {
        throw InvalidArgument("exact convolution would overflow 64-bit integers");
    }
    return {static_cast<std::int64_t>(total), analytic_trivial(a.size(), pred)};
}

SolutionCount count_solutions_fast(const IntervalSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    if (a.empty()) return {};
    const auto embedded = embed_interval(a, eq);
    return count_solutions_fast(embedded.set, eq, pred);
}

bool has_nontrivial_solution(const ResidueSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    check_units(a.group(), eq);
    return find_nontrivial([&](auto&& visit) { walk_residue_solutions(a, eq, visit); }, pred);
}

bool has_nontrivial_solution(const IntervalSet& a, const InvariantEquation& eq, TrivialityPredicate pred) {
    check_predicate(eq, pred);
    return find_nontrivial([&](auto&& visit) { walk_integer_solutions(a, eq, visit); }, pred);
}

namespace {

template <typename Sum>
bool pair_sums_distinct(std::span<const std::int64_t> s, Sum&& sum) {
    std::vector<std::int64_t> sums;
    sums.reserve(s.size() * (s.size() + 1) / 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) sums.push_back(sum(s[i], s[j]));
    }
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

template <typename Sum>
bool quadruples_trivial(std::span<const std::int64_t> s, Sum&& sum) {
    for (auto x1 : s)
        for (auto y1 : s)
            for (auto x2 : s)
                for (auto y2 : s) {
                    if (sum(x1, y1) != sum(x2, y2)) continue;
                    const bool same = (x1 == x2 && y1 == y2) || (x1 == y2 && y1 == x2);
                    if (!same) return false;
                }
    return true;
}

}  // namespace

bool is_sidon(const IntervalSet& s) {
    return pair_sums_distinct(s.elements(), [](std::int64_t x, std::int64_t y) { return x + y; });
}

bool is_sidon(const ResidueSet& s) {
    const auto& g = s.group();
    return pair_sums_distinct(s.elements(), [&](std::int64_t x, std::int64_t y) { return g.add(x, y); });
}

bool is_sidon_bruteforce(const IntervalSet& s) {
    return quadruples_trivial(s.elements(), [](std::int64_t x, std::int64_t y) { return x + y; });
}

bool is_sidon_bruteforce(const ResidueSet& s) {
    const auto& g = s.group();
    return quadruples_trivial(s.elements(), [&](std::int64_t x, std::int64_t y) { return g.add(x, y); });
}

namespace {

SolutionDensityReport assemble(std::int64_t ambient, std::size_t size, SolutionCount c, std::size_t arity) {
    SolutionDensityReport r;
    r.ambient_size = ambient;
    r.set_size = size;
    r.alpha = static_cast<double>(size) / static_cast<double>(ambient);
    r.total = c.total;
    r.trivial = c.trivial;
    r.normalized_total = static_cast<double>(c.total) / std::pow(static_cast<double>(ambient),
                                                                 static_cast<double>(arity - 1));
    return r;
}

}  // namespace

SolutionDensityReport solution_density_report(const ResidueSet& a, const InvariantEquation& eq) {
    return assemble(a.group().order(), a.size(), count_solutions_fast(a, eq), eq.arity());
}

SolutionDensityReport solution_density_report(const IntervalSet& a, const InvariantEquation& eq) {
    return assemble(a.length(), a.size(), count_solutions_fast(a, eq), eq.arity());
}

}  // namespace ieq
