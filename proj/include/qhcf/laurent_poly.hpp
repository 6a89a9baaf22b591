#pragma once

#include <string>
#include <vector>

#include "qhcf/bigint.hpp"

namespace qhcf {

// Laurent polynomial in q with arbitrary-precision integer coefficients.
//
// Storage is dense: coeffs()[t] is the coefficient of q^(min_degree() + t).
// Invariant: the first and last stored coefficients are nonzero unless the
// polynomial is zero, in which case coeffs() is empty and min_degree() == 0.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    LaurentPoly(long constant);
    LaurentPoly(BigInt constant);

    static LaurentPoly monomial(BigInt coeff, int degree);
    // coeffs[t] is the coefficient of q^(min_degree + t); trailing/leading
    // zeros are trimmed.
    static LaurentPoly from_coeffs(int min_degree, std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int min_degree() const { return min_deg_; }
    int max_degree() const;  // == min_degree() for the zero polynomial
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int degree) const;

    // Sum of coefficients, i.e. the value at q=1.
    BigInt eval_one() const;

    // p(q) -> p(1/q).  An involution.
    LaurentPoly subst_q_inverse() const;

    // p(q) * q^k.
    LaurentPoly shifted(int k) const;

    bool nonnegative() const;  // all coefficients >= 0

    // Canonical rendering, ascending powers, explicit signs:
    // "1 + 2*q + 3*q^2", "1*q^-1 + 1", "0".
    std::string to_string() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    int min_deg_ = 0;
    std::vector<BigInt> coeffs_;

    void trim();
};

}  // namespace qhcf
