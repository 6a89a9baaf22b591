#pragma once

#include <vector>

#include "qhcf/continued_fraction.hpp"
#include "qhcf/laurent_poly.hpp"

namespace qhcf {

// Square matrix of Laurent polynomials.  Entries are addressed 1-based to
// match the usual matrix-index conventions of the entry formulas.
class PolyMatrix {
public:
    explicit PolyMatrix(int dim);
    static PolyMatrix identity(int dim);

    int dim() const { return dim_; }
    LaurentPoly& entry(int i, int j);
    const LaurentPoly& entry(int i, int j) const;

    std::vector<std::vector<BigInt>> eval_one() const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    int dim_;
    std::vector<LaurentPoly> entries_;  // row-major
};

// The (m+1) x (m+1) transfer matrices.  mat_r/mat_l return the q-deformed
// versions: the all-ones triangular matrices right-multiplied by
// diag(q^m, ..., q, 1).
PolyMatrix mat_r(int m);
PolyMatrix mat_l(int m);
PolyMatrix mat_q(int m);  // diag(q^m, q^(m-1), ..., q, 1)
PolyMatrix mat_w(int m);  // anti-diagonal ones; involutive

// Closed-form powers: (R^a)_{i,i+k} = q^{a(m+1-i-k)} * qmultichoose(a, k)_q,
// and (L^a)_{ij} = q^{i-j} (R^a)_{ji}.  a >= 0.
PolyMatrix mat_r_pow(int m, int a);
PolyMatrix mat_l_pow(int m, int a);

enum class LambdaSign { Plus, Minus };

// Lambda^+(q,a) = R(q)^a W and Lambda^-(q,a) = W L(q)^a, built from their
// entry formulas.  a >= 1.
PolyMatrix mat_lambda(int m, int a, LambdaSign sign);

// Alternating product Lambda^+(a_1) Lambda^-(a_2) Lambda^+(a_3) ... for the
// strip of the given term sequence.  Each entry is the corresponding
// first/last-part-restricted P-partition generating function up to an
// explicit power of q depending on the parity of n.
PolyMatrix product_x(const ContinuedFraction& cf, int m);

}  // namespace qhcf
