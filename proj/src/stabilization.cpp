#include "qhcf/stabilization.hpp"

#include <stdexcept>
#include <utility>

#include "qhcf/errors.hpp"
#include "qhcf/higher_cf.hpp"

namespace qhcf {

IrrationalCF::IrrationalCF(std::vector<int> prefix, std::vector<int> periodic_tail)
    : prefix_(std::move(prefix)), periodic_(std::move(periodic_tail)) {
    if (periodic_.empty()) throw std::invalid_argument("IrrationalCF: empty periodic tail");
    for (int a : prefix_)
        if (a < 1) throw InvalidRational("IrrationalCF: terms must be positive");
    for (int a : periodic_)
        if (a < 1) throw InvalidRational("IrrationalCF: terms must be positive");
}

IrrationalCF::IrrationalCF(std::vector<int> prefix, std::function<int(int)> generator)
    : prefix_(std::move(prefix)), generator_(std::move(generator)) {
    if (!generator_) throw std::invalid_argument("IrrationalCF: null generator");
    for (int a : prefix_)
        if (a < 1) throw InvalidRational("IrrationalCF: terms must be positive");
}

int IrrationalCF::term(int k) const {
    if (k < 1) throw std::out_of_range("IrrationalCF::term");
    if (k <= static_cast<int>(prefix_.size())) return prefix_[static_cast<size_t>(k) - 1];
    int a;
    if (generator_) {
        a = generator_(k);
    } else {
        size_t off = static_cast<size_t>(k) - prefix_.size() - 1;
        a = periodic_[off % periodic_.size()];
    }
    if (a < 1) throw InvalidRational("IrrationalCF: generator produced a term < 1");
    return a;
}

ContinuedFraction IrrationalCF::convergent_terms(int n) const {
    std::vector<int> t;
    t.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) t.push_back(term(k));
    return ContinuedFraction(std::move(t));
}

SeriesPrefix expand_hcf(const ContinuedFraction& cf, int i, int m, int order) {
    if (order < 0) throw std::invalid_argument("expand_hcf: order must be >= 0");
    RatFunc f = hcf_q_matrix(cf, i, m);
    if (f.den().min_degree() != 0 || f.den().coeff(0) != 1)
        throw NonUnitConstantTerm("expand_hcf: denominator constant term is not 1");
    return series_expand(f, order);
}

SeriesPrefix stable_series(const IrrationalCF& x, int i, int m, int order) {
    if (order < 0) throw std::invalid_argument("stable_series: order must be >= 0");
    long sum = 0;
    int n = 0;
    // The convergent at even n is exact through q^(sum - 2): later
    // convergents first deviate at degree sum - 1.  Stop at the first even n
    // with sum - 1 strictly above order.
    while (true) {
        ++n;
        sum += x.term(n);
        if (n % 2 == 0 && sum - 1 > order) break;
    }
    return expand_hcf(x.convergent_terms(n), i, m, order);
}

int agreement_degree(const ContinuedFraction& a, const ContinuedFraction& b, int i, int m,
                     int cap) {
    if (cap < 0) throw std::invalid_argument("agreement_degree: cap must be >= 0");
    SeriesPrefix sa = expand_hcf(a, i, m, cap);
    SeriesPrefix sb = expand_hcf(b, i, m, cap);
    for (int k = 0; k <= cap; ++k)
        if (sa.coeffs[static_cast<size_t>(k)] != sb.coeffs[static_cast<size_t>(k)]) return k;
    return cap;
}

}  // namespace qhcf
