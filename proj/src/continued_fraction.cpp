#include "qhcf/continued_fraction.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "qhcf/errors.hpp"

namespace qhcf {

ContinuedFraction::ContinuedFraction(std::vector<int> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidRational("ContinuedFraction: no terms");
    for (int a : terms_)
        if (a < 1) throw InvalidRational("ContinuedFraction: terms must be positive");
}

ContinuedFraction ContinuedFraction::from_rational(const BigInt& r, const BigInt& s) {
    if (s <= 0) throw InvalidRational("from_rational: denominator must be positive");
    if (r < s) throw InvalidRational("from_rational: value must be >= 1");
    BigInt a = r / gcd(r, s);
    BigInt b = s / gcd(r, s);
    std::vector<int> terms;
    while (b > 0) {
        BigInt quot = a / b;
        // A term this size means a strip with that many cells; nothing
        // downstream could ever evaluate it, so fail loudly instead of
        // wrapping.
        if (quot > std::numeric_limits<int>::max())
            throw InvalidRational("from_rational: continued fraction term exceeds int range");
        terms.push_back(static_cast<int>(quot));
        BigInt rem = a % b;
        a = b;
        b = rem;
    }
    return ContinuedFraction(std::move(terms));
}

long ContinuedFraction::term_sum() const {
    long s = 0;
    for (int a : terms_) s += a;
    return s;
}

BigRational ContinuedFraction::value() const {
    BigRational v(terms_.back());
    for (auto it = terms_.rbegin() + 1; it != terms_.rend(); ++it) v = BigRational(*it) + 1 / v;
    return v;
}

ContinuedFraction ContinuedFraction::prefix(int n) const {
    if (n < 1 || n > size()) throw std::out_of_range("ContinuedFraction::prefix");
    return ContinuedFraction(std::vector<int>(terms_.begin(), terms_.begin() + n));
}

ContinuedFraction ContinuedFraction::tail() const {
    if (size() < 2) throw std::out_of_range("ContinuedFraction::tail");
    return ContinuedFraction(std::vector<int>(terms_.begin() + 1, terms_.end()));
}

ContinuedFraction ContinuedFraction::canonical() const {
    std::vector<int> t = terms_;
    while (t.size() >= 2 && t.back() == 1) {
        t.pop_back();
        t.back() += 1;
    }
    return ContinuedFraction(std::move(t));
}

ContinuedFraction ContinuedFraction::even_length() const {
    ContinuedFraction c = canonical();
    if (c.size() % 2 == 0) return c;
    std::vector<int> t = c.terms_;
    if (t.back() < 2)
        throw InvalidRational("even_length: the value 1 has no even-length expansion");
    t.back() -= 1;
    t.push_back(1);
    return ContinuedFraction(std::move(t));
}

}  // namespace qhcf
