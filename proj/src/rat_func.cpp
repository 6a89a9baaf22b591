#include "qhcf/rat_func.hpp"

#include <utility>

#include "qhcf/errors.hpp"

namespace qhcf {

RatFunc::RatFunc(LaurentPoly numerator) : num_(std::move(numerator)), den_(1) {}

RatFunc::RatFunc(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw InvalidRational("RatFunc: zero denominator");
    normalize_sign();
}

void RatFunc::normalize_sign() {
    if (den_.coeff(den_.min_degree()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::subst_q_inverse() const {
    return RatFunc(num_.subst_q_inverse(), den_.subst_q_inverse());
}

RatFunc RatFunc::reciprocal() const {
    if (num_.is_zero()) throw InvalidRational("RatFunc: reciprocal of zero");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize_sign();
    return *this;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + RatFunc(-b.num_, b.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize_sign();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.reciprocal(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

SeriesPrefix series_expand(const RatFunc& f, int order) {
    const LaurentPoly& den = f.den();
    const LaurentPoly& num = f.num();
    if (den.min_degree() != 0)
        throw NonUnitConstantTerm("series_expand: denominator constant term is zero or denominator has negative powers");
    if (!num.is_zero() && num.min_degree() < 0)
        throw NonUnitConstantTerm("series_expand: numerator has negative powers");
    const BigInt d0 = den.coeff(0);

    SeriesPrefix out;
    out.coeffs.resize(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        BigInt acc = num.coeff(k);
        int jmax = std::min(k, den.max_degree());
        for (int j = 1; j <= jmax; ++j) acc -= den.coeff(j) * out.coeffs[static_cast<size_t>(k - j)];
        if (acc % d0 != 0) throw NonIntegerSeries("series_expand: non-integer coefficient at q^" + std::to_string(k));
        out.coeffs[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

}  // namespace qhcf
