#pragma once

#include <functional>
#include <vector>

#include "qhcf/continued_fraction.hpp"
#include "qhcf/rat_func.hpp"

namespace qhcf {

// Infinite continued fraction [a_1, a_2, ...]: a finite prefix followed by
// either a repeating block or an on-demand generator.  All terms must be
// positive; the generator receives the 1-based overall index.
class IrrationalCF {
public:
    IrrationalCF(std::vector<int> prefix, std::vector<int> periodic_tail);
    IrrationalCF(std::vector<int> prefix, std::function<int(int)> generator);

    int term(int k) const;  // a_k, 1-indexed
    ContinuedFraction convergent_terms(int n) const;  // [a_1, ..., a_n]

private:
    std::vector<int> prefix_;
    std::vector<int> periodic_;
    std::function<int(int)> generator_;
};

// Power-series prefix of hcf_q_matrix(cf, i, m) through q^order.  The
// denominator is a generating function with constant term 1, which is
// verified before expanding.
SeriesPrefix expand_hcf(const ContinuedFraction& cf, int i, int m, int order);

// Stabilized series of r^q_{i,m} at the irrational limit.  Consecutive
// convergents first disagree at degree exactly a_1 + ... + a_n - 1 (even n),
// so convergents are consumed until the first even n with that sum strictly
// above order; the expansion of that convergent is exact through q^order and
// consuming further terms cannot change the returned prefix.
SeriesPrefix stable_series(const IrrationalCF& x, int i, int m, int order);

// The degree up to which the series of the two values agree: the index of
// their first differing coefficient, saturated at cap.  "Agree up to q^D"
// is exclusive: coefficients of q^0 .. q^(D-1) coincide.
int agreement_degree(const ContinuedFraction& a, const ContinuedFraction& b, int i, int m,
                     int cap);

}  // namespace qhcf
