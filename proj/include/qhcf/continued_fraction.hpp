#pragma once

#include <vector>

#include "qhcf/bigint.hpp"

namespace qhcf {

// Finite continued fraction [a_1, ..., a_n] with positive integer terms,
// encoding a rational >= 1.  Terms ending in 1 are accepted (convergent
// prefixes of an infinite expansion produce them); canonical() merges a
// trailing 1 so that a_n >= 2 whenever n >= 2.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<int> terms);

    // Greedy Euclidean expansion of r/s (reduced first; r/s >= 1 required,
    // throws InvalidRational otherwise).  The result is canonical.
    static ContinuedFraction from_rational(const BigInt& r, const BigInt& s);

    const std::vector<int>& terms() const { return terms_; }
    int size() const { return static_cast<int>(terms_.size()); }
    int term(int k) const { return terms_[static_cast<size_t>(k) - 1]; }  // 1-indexed
    long term_sum() const;

    BigRational value() const;

    ContinuedFraction prefix(int n) const;  // [a_1, ..., a_n]
    ContinuedFraction tail() const;         // [a_2, ..., a_n]; requires n >= 2

    ContinuedFraction canonical() const;
    // Even-length form, via [.., a_n] <-> [.., a_n - 1, 1].  Undefined for
    // the value 1 (callers special-case [1]).
    ContinuedFraction even_length() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<int> terms_;
};

}  // namespace qhcf
