#pragma once

#include <vector>

#include "qhcf/continued_fraction.hpp"
#include "qhcf/rat_func.hpp"

namespace qhcf {

// Higher continued fractions r_{i,m} and their q-deformations r^q_{i,m},
// for 0 <= i <= m.  Three routes are provided: the q=1 rational recursion,
// the q recursion (which exercises the q -> 1/q substitution), and the
// transfer-matrix route (polynomial arithmetic only).  All agree; the matrix
// route is the primary evaluation path.

// q=1 value by the nested recursion; base cases r_{0,m} = 1 and
// r_{i,m}(integer n) = multichoose(n, i).
BigRational hcf_q1(const ContinuedFraction& cf, int i, int m);

// The m-continued-fraction vector (r_{m,m}, r_{m-1,m}, ..., r_{0,m}).
std::vector<BigRational> hcf_q1_vector(const ContinuedFraction& cf, int m);

// q-deformed value by the recursion
//   r^q_{i,m}(x) = sum_k q^{k a_1} multichoose(a_1, i-k)_q
//                  * r^{1/q}_{m-k,m}(x') / r^{1/q}_{m,m}(x').
RatFunc hcf_q_recursive(const ContinuedFraction& cf, int i, int m);

// q-deformed value as the ratio of first-column entries of product_x.
// Both entries carry a common factor q^m when n is even; it is divided out,
// so numerator and denominator are exactly the first-part-restricted
// P-partition generating functions (constant term 1, nonnegative
// coefficients).
RatFunc hcf_q_matrix(const ContinuedFraction& cf, int i, int m);

// Term sequence of the strip with the first column of cells deleted:
// [1, a_2 - 1, a_3, ...], collapsing a zero second term.  The plain (i, 1)
// generating functions of the original strip with first part forced to 0
// coincide with the unrestricted generating function of this strip.
ContinuedFraction deleted_first_column(const ContinuedFraction& cf);

// The m=1 q-rational via the nested two-variable continued fraction
//   [a_1]_q + q^{a_1} / ([a_2]_{1/q} + q^{-a_2} / (...)),
// evaluated on the even-length form of cf.  Agrees with
// hcf_q_matrix(cf, 1, 1) under cross-multiplication.
RatFunc mgo_qrational(const ContinuedFraction& cf);

}  // namespace qhcf
