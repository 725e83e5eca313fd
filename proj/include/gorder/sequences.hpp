#pragma once

#include <vector>

#include "gorder/graph.hpp"

namespace gorder {

/// A finite sequence (n_1,...,n_k) of naturals with n_k > 0 when nonempty,
/// packed as 2^{n_1} * 3^{n_2} * ... * p_k^{n_k}. The empty sequence packs
/// to 1.
class ExpSequence {
public:
    ExpSequence() = default;
    static ExpSequence from_entries(std::vector<Natural> entries);
    /// Factorises. resource_error when the value needs primes beyond the
    /// configured table.
    static ExpSequence from_packed(const Natural& value);

    const std::vector<Natural>& entries() const { return entries_; }
    Natural packed() const;
    /// 1-based; entries beyond the length read as 0.
    Natural get(std::size_t i) const;
    Natural sum() const;
    std::size_t length() const { return entries_.size(); }

    bool operator==(const ExpSequence&) const = default;

private:
    std::vector<Natural> entries_;
};

/// i-th prime (1-based: nth_prime(1) == 2).
Natural nth_prime(std::size_t i);

/// Exponent of the i-th prime in value (1-based i).
Natural prime_exponent(const Natural& value, std::size_t i);

/// Sum of all prime exponents of value (value 1 -> 0).
Natural prime_exponent_sum(const Natural& value);

/// True when every prime factor of value is among the first k primes.
bool factors_within(const Natural& value, std::size_t k);

/// From per-size counts (n_i = number of parts of size i) to the cumulative
/// copy profile m_i = sum_j floor(j/i) * n_j.
ExpSequence counts_to_copies(const ExpSequence& counts);

/// Inverse of counts_to_copies; domain_error when the input is not in its
/// image (some recovered entry would be negative, or the result does not map
/// back).
ExpSequence copies_to_counts(const ExpSequence& copies);

}  // namespace gorder
