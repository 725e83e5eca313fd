#include "gorder/sequences.hpp"

#include <mutex>

namespace gorder {

namespace {
constexpr std::size_t kMaxPrimes = 64;

const std::vector<Natural>& prime_table() {
    static std::vector<Natural> primes = [] {
        std::vector<Natural> out;
        int cand = 2;
        while (out.size() < kMaxPrimes) {
            bool ok = true;
            for (int d = 2; d * d <= cand; ++d)
                if (cand % d == 0) {
                    ok = false;
                    break;
                }
            if (ok) out.emplace_back(cand);
            ++cand;
        }
        return out;
    }();
    return primes;
}
}  // namespace

Natural nth_prime(std::size_t i) {
    if (i == 0 || i > kMaxPrimes) throw resource_error("prime index out of range");
    return prime_table()[i - 1];
}

Natural prime_exponent(const Natural& value, std::size_t i) {
    if (value <= 0) throw domain_error("prime_exponent: value must be positive");
    Natural p = nth_prime(i);
    Natural v = value, e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

Natural prime_exponent_sum(const Natural& value) {
    if (value <= 0) throw domain_error("prime_exponent_sum: value must be positive");
    Natural v = value, total = 0;
    for (std::size_t i = 1; v > 1; ++i) {
        if (i > kMaxPrimes) throw resource_error("value has prime factors beyond the table");
        Natural p = nth_prime(i);
        while (v % p == 0) {
            v /= p;
            ++total;
        }
        if (p * p > v && v > 1) {
            // remaining part is prime; count it if within table, else fail
            for (std::size_t j = i + 1; j <= kMaxPrimes; ++j)
                if (nth_prime(j) == v) return total + 1;
            throw resource_error("value has prime factors beyond the table");
        }
    }
    return total;
}

bool factors_within(const Natural& value, std::size_t k) {
    if (value <= 0) throw domain_error("factors_within: value must be positive");
    Natural v = value;
    for (std::size_t i = 1; i <= k && i <= kMaxPrimes; ++i) {
        Natural p = nth_prime(i);
        while (v % p == 0) v /= p;
    }
    return v == 1;
}

ExpSequence ExpSequence::from_entries(std::vector<Natural> entries) {
    for (const auto& e : entries)
        if (e < 0) throw domain_error("sequence entries must be naturals");
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
    if (entries.size() > kMaxPrimes) throw resource_error("sequence too long");
    ExpSequence s;
    s.entries_ = std::move(entries);
    return s;
}

ExpSequence ExpSequence::from_packed(const Natural& value) {
    if (value <= 0) throw domain_error("packed sequence value must be positive");
    std::vector<Natural> entries;
    Natural v = value;
    for (std::size_t i = 1; v > 1; ++i) {
        if (i > kMaxPrimes) throw resource_error("value has prime factors beyond the table");
        Natural p = nth_prime(i);
        Natural e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        entries.push_back(e);
    }
    return from_entries(std::move(entries));
}

Natural ExpSequence::packed() const {
    Natural out = 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        Natural p = nth_prime(i + 1);
        for (Natural e = 0; e < entries_[i]; ++e) out *= p;
    }
    return out;
}

Natural ExpSequence::get(std::size_t i) const {
    if (i == 0) throw domain_error("sequence index is 1-based");
    if (i > entries_.size()) return 0;
    return entries_[i - 1];
}

Natural ExpSequence::sum() const {
    Natural total = 0;
    for (const auto& e : entries_) total += e;
    return total;
}

ExpSequence counts_to_copies(const ExpSequence& counts) {
    std::size_t k = counts.length();
    std::vector<Natural> out(k);
    for (std::size_t i = 1; i <= k; ++i) {
        Natural m = 0;
        for (std::size_t j = 1; j <= k; ++j) m += Natural(j / i) * counts.get(j);
        out[i - 1] = m;
    }
    return ExpSequence::from_entries(std::move(out));
}

ExpSequence copies_to_counts(const ExpSequence& copies) {
    std::size_t k = copies.length();
    std::vector<Natural> out(k);
    for (std::size_t i = k; i >= 1; --i) {
        Natural acc = copies.get(i);
        for (std::size_t j = i + 1; j <= k; ++j) acc -= Natural(j / i) * out[j - 1];
        if (acc < 0) throw domain_error("value outside the image of the profile map");
        out[i - 1] = acc;
    }
    auto counts = ExpSequence::from_entries(std::move(out));
    if (counts_to_copies(counts) != copies)
        throw domain_error("value outside the image of the profile map");
    return counts;
}

}  // namespace gorder
