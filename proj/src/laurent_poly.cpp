#include "qhcf/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qhcf {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) coeffs_.push_back(BigInt(constant));
}

LaurentPoly::LaurentPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int degree) {
    LaurentPoly p;
    if (coeff != 0) {
        p.min_deg_ = degree;
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int min_degree, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.min_deg_ = min_degree;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + lead, coeffs_.begin() + tail);
        min_deg_ += static_cast<int>(lead);
    }
}

int LaurentPoly::max_degree() const {
    if (is_zero()) return min_deg_;
    return min_deg_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(int degree) const {
    int t = degree - min_deg_;
    if (t < 0 || t >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[t];
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::subst_q_inverse() const {
    if (is_zero()) return {};
    std::vector<BigInt> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-max_degree(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (is_zero()) return {};
    LaurentPoly p(*this);
    p.min_deg_ += k;
    return p;
}

bool LaurentPoly::nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(min_deg_, o.min_deg_);
    int hi = std::max(max_degree(), o.max_degree());
    std::vector<BigInt> out(static_cast<size_t>(hi - lo + 1));
    for (size_t t = 0; t < coeffs_.size(); ++t) out[min_deg_ - lo + t] += coeffs_[t];
    for (size_t t = 0; t < o.coeffs_.size(); ++t) out[o.min_deg_ - lo + t] += o.coeffs_[t];
    min_deg_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t s = 0; s < a.coeffs_.size(); ++s)
        for (size_t t = 0; t < b.coeffs_.size(); ++t) out[s + t] += a.coeffs_[s] * b.coeffs_[t];
    return LaurentPoly::from_coeffs(a.min_deg_ + b.min_deg_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        bool negative = coeffs_[t] < 0;
        if (os.tellp() == 0) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        BigInt mag = abs(coeffs_[t]);
        int deg = min_deg_ + static_cast<int>(t);
        if (deg == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << '*';
            os << 'q';
            if (deg != 1) os << '^' << deg;
        }
    }
    return os.str();
}

}  // namespace qhcf
