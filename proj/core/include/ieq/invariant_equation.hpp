#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ieq {

/// a_1 x_1 + ... + a_k x_k = 0 with k >= 3, every a_i nonzero and sum a_i = 0.
class InvariantEquation {
public:
    explicit InvariantEquation(std::vector<std::int64_t> coefficients);

    /// x_1 + ... + x_{k-1} = (k-1) x_k.
    static InvariantEquation convex(std::size_t arity);
    /// x_1 + x_2 = x_3 + x_4, written as (1, 1, -1, -1).
    static InvariantEquation sidon();

    std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
    std::size_t arity() const noexcept { return coeffs_.size(); }
    std::int64_t coefficient(std::size_t i) const { return coeffs_.at(i); }
    /// sum |a_i|
    std::int64_t l1_norm() const noexcept;
    std::string to_string() const;

    friend bool operator==(const InvariantEquation&, const InvariantEquation&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

}  // namespace ieq
