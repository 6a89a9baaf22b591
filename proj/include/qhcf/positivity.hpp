#pragma once

#include <vector>

#include "qhcf/border_strip.hpp"
#include "qhcf/laurent_poly.hpp"

namespace qhcf {

// Pair of P-partitions, left on the strip of r/s, right on the strip of
// a/b; d is the index of the last cell the two strips have in common.
struct PartitionPair {
    PPartition left;
    PPartition right;
    int d = 0;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// The positivity setup for a pair of rationals r/s > a/b >= 1 and indices
// 0 <= i <= m.  Writing r^q_{i,m}(r/s) = R/S and r^q_{i,m}(a/b) = A/B (all
// four polynomials are first-part-restricted P-partition generating
// functions), the difference B R - A S has nonnegative coefficients; the
// prefix-swap injection below realizes this combinatorially.
class PositivityProblem {
public:
    PositivityProblem(const BigInt& r, const BigInt& s, const BigInt& a, const BigInt& b, int i,
                      int m);

    int i() const { return i_; }
    int m() const { return m_; }
    int d() const { return d_; }
    const BorderStrip& left_strip() const { return left_; }
    const BorderStrip& right_strip() const { return right_; }

    // B R - A S via the matrix route.  Throws PositivityViolation if any
    // coefficient comes out negative (possible only through a bug).
    LaurentPoly difference() const;

    // S x A: left has first part 0, right has first part <= i.
    std::vector<PartitionPair> sa_pairs() const;
    // R x B: left has first part <= i, right has first part 0.
    std::vector<PartitionPair> rb_pairs() const;

    // Positions j in 1..d such that exchanging the labels of cells 1..j
    // between the two partitions yields valid P-partitions on both strips.
    std::vector<int> swappable_positions(const PartitionPair& pair) const;

    // The weight-preserving injection S x A -> R x B: swap at the first
    // swappable position.  Throws NoSwappablePosition if there is none
    // (which would be a bug).  When the strips share no cell (a/b = 1, empty
    // right strip) the map is the identity embedding.
    PartitionPair inject(const PartitionPair& pair) const;

    // Pairs of R x B not reached by the injection; their weight generating
    // function equals difference().
    std::vector<PartitionPair> complement_pairs() const;

    PartitionPair swapped_at(const PartitionPair& pair, int j) const;

private:
    BorderStrip left_, right_;
    int i_, m_, d_;

    std::vector<PartitionPair> product_pairs(int left_first_max, int right_first_max) const;
};

// Convenience wrapper for the difference polynomial alone.
LaurentPoly positivity_difference(const BigInt& r, const BigInt& s, const BigInt& a,
                                  const BigInt& b, int i, int m);

}  // namespace qhcf
