#pragma once

#include "qhcf/laurent_poly.hpp"

namespace qhcf {

// q-integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.  Requires n >= 0.
LaurentPoly qint(int n);

// Gaussian binomial coefficient.  Computed by the q-Pascal recurrence, so
// everything stays in polynomial arithmetic.  Returns 0 when k < 0, k > n,
// or n < 0; this convention makes the transfer-matrix entry formulas hold
// at boundary indices with no special cases.
LaurentPoly qbinom(int n, int k);

// q-multichoose: the generating function for multisets of size k from a
// values, equal to qbinom(a + k - 1, k).  Requires a >= 1, k >= 0 for the
// combinatorial reading; negative k yields 0 like qbinom.
LaurentPoly qmultichoose(int a, int k);

}  // namespace qhcf
