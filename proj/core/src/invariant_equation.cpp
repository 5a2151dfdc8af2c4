#include "ieq/invariant_equation.hpp"

#include <cstdlib>
#include <numeric>

#include "ieq/error.hpp"

namespace ieq {

InvariantEquation::InvariantEquation(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() < 3) throw InvalidArgument("invariant equation needs at least 3 variables");
    for (std::int64_t a : coeffs_) {
        if (a == 0) throw InvalidArgument("equation coefficients must be nonzero");
    }
    if (std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0}) != 0) {
        throw InvalidArgument("coefficients of " + to_string() + " do not sum to zero");
    }
}

InvariantEquation InvariantEquation::convex(std::size_t arity) {
    if (arity < 3) throw InvalidArgument("convex equation needs at least 3 variables");
    std::vector<std::int64_t> c(arity, 1);
    c.back() = -static_cast<std::int64_t>(arity - 1);
    return InvariantEquation(std::move(c));
}

InvariantEquation InvariantEquation::sidon() { return InvariantEquation({1, 1, -1, -1}); }

std::int64_t InvariantEquation::l1_norm() const noexcept {
    std::int64_t s = 0;
    for (std::int64_t a : coeffs_) s += std::llabs(a);
    return s;
}

std::string InvariantEquation::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs_[i]);
    }
    return out + ")";
}

}  // namespace ieq
