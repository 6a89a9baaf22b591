#pragma once

#include <vector>

#include "qhcf/laurent_poly.hpp"

namespace qhcf {

// Quotient of two Laurent polynomials.  No GCD reduction is performed:
// equality is decided by cross-multiplication.  The denominator is kept with
// a positive lowest-degree coefficient.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(LaurentPoly numerator);  // numerator / 1
    RatFunc(LaurentPoly numerator, LaurentPoly denominator);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RatFunc subst_q_inverse() const;
    RatFunc reciprocal() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    // a/b == c/d  iff  a*d == c*b.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    LaurentPoly num_, den_;

    void normalize_sign();
};

// Truncated power series: coeffs[k] is the coefficient of q^k, known exactly
// for 0 <= k <= order().  Nothing is asserted beyond the order.
struct SeriesPrefix {
    std::vector<BigInt> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

// Power-series expansion of f at q=0, exact through q^order.  Requires the
// denominator to be a polynomial with nonzero constant term (min degree 0);
// throws NonUnitConstantTerm otherwise.  Coefficients must come out integer
// at every step or NonIntegerSeries is thrown.
SeriesPrefix series_expand(const RatFunc& f, int order);

}  // namespace qhcf
