#include "qhcf/transfer_matrix.hpp"

#include <stdexcept>

#include "qhcf/qnum.hpp"

namespace qhcf {

PolyMatrix::PolyMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
    if (dim < 2) throw std::invalid_argument("PolyMatrix: dim must be >= 2");
}

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix id(dim);
    for (int i = 1; i <= dim; ++i) id.entry(i, i) = LaurentPoly(1);
    return id;
}

LaurentPoly& PolyMatrix::entry(int i, int j) {
    return entries_[static_cast<size_t>(i - 1) * dim_ + (j - 1)];
}

const LaurentPoly& PolyMatrix::entry(int i, int j) const {
    return entries_[static_cast<size_t>(i - 1) * dim_ + (j - 1)];
}

std::vector<std::vector<BigInt>> PolyMatrix::eval_one() const {
    std::vector<std::vector<BigInt>> out(static_cast<size_t>(dim_),
                                         std::vector<BigInt>(static_cast<size_t>(dim_)));
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            out[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = entry(i, j).eval_one();
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix out(dim_);
    for (int i = 1; i <= dim_; ++i)
        for (int k = 1; k <= dim_; ++k) {
            const LaurentPoly& a = entry(i, k);
            if (a.is_zero()) continue;
            for (int j = 1; j <= dim_; ++j) out.entry(i, j) += a * o.entry(k, j);
        }
    return out;
}

namespace {

void require_m(int m) {
    if (m < 1) throw std::invalid_argument("transfer matrices need m >= 1");
}

}  // namespace

PolyMatrix mat_r(int m) {
    require_m(m);
    PolyMatrix r(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = i; j <= m + 1; ++j) r.entry(i, j) = LaurentPoly::monomial(1, m + 1 - j);
    return r;
}

PolyMatrix mat_l(int m) {
    require_m(m);
    PolyMatrix l(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= i; ++j) l.entry(i, j) = LaurentPoly::monomial(1, m + 1 - j);
    return l;
}

PolyMatrix mat_q(int m) {
    require_m(m);
    PolyMatrix q(m + 1);
    for (int i = 1; i <= m + 1; ++i) q.entry(i, i) = LaurentPoly::monomial(1, m + 1 - i);
    return q;
}

PolyMatrix mat_w(int m) {
    require_m(m);
    PolyMatrix w(m + 1);
    for (int i = 1; i <= m + 1; ++i) w.entry(i, m + 2 - i) = LaurentPoly(1);
    return w;
}

PolyMatrix mat_r_pow(int m, int a) {
    require_m(m);
    if (a < 0) throw std::invalid_argument("mat_r_pow: a must be >= 0");
    if (a == 0) return PolyMatrix::identity(m + 1);
    PolyMatrix out(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = i; j <= m + 1; ++j)
            out.entry(i, j) = qmultichoose(a, j - i).shifted(a * (m + 1 - j));
    return out;
}

PolyMatrix mat_l_pow(int m, int a) {
    require_m(m);
    if (a < 0) throw std::invalid_argument("mat_l_pow: a must be >= 0");
    PolyMatrix rp = mat_r_pow(m, a);
    PolyMatrix out(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= i; ++j) out.entry(i, j) = rp.entry(j, i).shifted(i - j);
    return out;
}

PolyMatrix mat_lambda(int m, int a, LambdaSign sign) {
    require_m(m);
    if (a < 1) throw std::invalid_argument("mat_lambda: a must be >= 1");
    PolyMatrix out(m + 1);
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= m + 1; ++j) {
            int k = m + 2 - i - j;
            if (k < 0) continue;
            LaurentPoly e = (sign == LambdaSign::Plus)
                                ? qmultichoose(a, k).shifted((j - 1) * a)
                                : qmultichoose(a, k).shifted((i - 1) * a + k);
            out.entry(i, j) = std::move(e);
        }
    return out;
}

PolyMatrix product_x(const ContinuedFraction& cf, int m) {
    require_m(m);
    PolyMatrix x = PolyMatrix::identity(m + 1);
    const auto& terms = cf.terms();
    for (size_t t = 0; t < terms.size(); ++t)
        x = x * mat_lambda(m, terms[t], t % 2 == 0 ? LambdaSign::Plus : LambdaSign::Minus);
    return x;
}

}  // namespace qhcf
