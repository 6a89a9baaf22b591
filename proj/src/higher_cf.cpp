#include "qhcf/higher_cf.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhcf/errors.hpp"
#include "qhcf/qnum.hpp"
#include "qhcf/transfer_matrix.hpp"

namespace qhcf {

namespace {

void require_im(int i, int m) {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("need 0 <= i <= m, m >= 1");
}

BigInt multichoose_int(int a, int k) { return qmultichoose(a, k).eval_one(); }

std::vector<BigRational> hcf_q1_vector_impl(const ContinuedFraction& cf, int m) {
    std::vector<BigRational> r(static_cast<size_t>(m) + 1);  // r[i] = r_{i,m}
    if (cf.size() == 1) {
        for (int i = 0; i <= m; ++i) r[static_cast<size_t>(i)] = BigRational(multichoose_int(cf.term(1), i));
        return r;
    }
    std::vector<BigRational> t = hcf_q1_vector_impl(cf.tail(), m);
    int a1 = cf.term(1);
    for (int i = 0; i <= m; ++i) {
        BigRational acc = 0;
        for (int k = 0; k <= i; ++k)
            acc += BigRational(multichoose_int(a1, i - k)) * t[static_cast<size_t>(m - k)];
        r[static_cast<size_t>(i)] = acc / t[static_cast<size_t>(m)];
    }
    return r;
}

std::vector<RatFunc> hcf_q_vector_impl(const ContinuedFraction& cf, int m) {
    std::vector<RatFunc> r(static_cast<size_t>(m) + 1);
    if (cf.size() == 1) {
        for (int i = 0; i <= m; ++i) r[static_cast<size_t>(i)] = RatFunc(qmultichoose(cf.term(1), i));
        return r;
    }
    std::vector<RatFunc> t = hcf_q_vector_impl(cf.tail(), m);
    for (auto& f : t) f = f.subst_q_inverse();
    int a1 = cf.term(1);
    for (int i = 0; i <= m; ++i) {
        RatFunc acc;
        for (int k = 0; k <= i; ++k) {
            RatFunc term(LaurentPoly::monomial(1, k * a1) * qmultichoose(a1, i - k));
            acc += term * t[static_cast<size_t>(m - k)] / t[static_cast<size_t>(m)];
        }
        r[static_cast<size_t>(i)] = acc;
    }
    return r;
}

}  // namespace

BigRational hcf_q1(const ContinuedFraction& cf, int i, int m) {
    require_im(i, m);
    return hcf_q1_vector_impl(cf, m)[static_cast<size_t>(i)];
}

std::vector<BigRational> hcf_q1_vector(const ContinuedFraction& cf, int m) {
    require_im(0, m);
    std::vector<BigRational> asc = hcf_q1_vector_impl(cf, m);
    return {asc.rbegin(), asc.rend()};
}

RatFunc hcf_q_recursive(const ContinuedFraction& cf, int i, int m) {
    require_im(i, m);
    return hcf_q_vector_impl(cf, m)[static_cast<size_t>(i)];
}

RatFunc hcf_q_matrix(const ContinuedFraction& cf, int i, int m) {
    require_im(i, m);
    PolyMatrix x = product_x(cf, m);
    LaurentPoly num = x.entry(m + 1 - i, 1);
    LaurentPoly den = x.entry(m + 1, 1);
    if (cf.size() % 2 == 0) {
        // The whole first column carries a factor q^m when n is even.
        if (num.min_degree() < m || den.min_degree() < m)
            throw std::logic_error("hcf_q_matrix: first column not divisible by q^m");
        num = num.shifted(-m);
        den = den.shifted(-m);
    }
    return RatFunc(std::move(num), std::move(den));
}

ContinuedFraction deleted_first_column(const ContinuedFraction& cf) {
    if (cf.size() < 2) throw std::invalid_argument("deleted_first_column: need at least two terms");
    const auto& a = cf.terms();
    std::vector<int> t;
    if (a[1] == 1) {
        // [1, 0, a_3, ...] collapses to [1 + a_3, a_4, ...].
        if (cf.size() == 2) return ContinuedFraction({1});
        t.push_back(1 + a[2]);
        t.insert(t.end(), a.begin() + 3, a.end());
    } else {
        t.push_back(1);
        t.push_back(a[1] - 1);
        t.insert(t.end(), a.begin() + 2, a.end());
    }
    return ContinuedFraction(std::move(t));
}

RatFunc mgo_qrational(const ContinuedFraction& cf) {
    if (cf.canonical().terms() == std::vector<int>{1}) return RatFunc(LaurentPoly(1));
    ContinuedFraction even = cf.even_length();
    const auto& a = even.terms();
    int n = even.size();
    // Innermost level is [a_n]_{1/q}; build outward.
    RatFunc f(qint(a[static_cast<size_t>(n) - 1]).subst_q_inverse());
    for (int t = n - 1; t >= 1; --t) {
        int at = a[static_cast<size_t>(t) - 1];
        bool odd_pos = (t % 2 == 1);
        LaurentPoly base = odd_pos ? qint(at) : qint(at).subst_q_inverse();
        LaurentPoly shift = LaurentPoly::monomial(1, odd_pos ? at : -at);
        f = RatFunc(base) + RatFunc(shift) / f;
    }
    // Clear the common q-power so numerator and denominator are honest
    // polynomials.
    int low = std::min(f.num().min_degree(), f.den().min_degree());
    if (low < 0) f = RatFunc(f.num().shifted(-low), f.den().shifted(-low));
    return f;
}

}  // namespace qhcf
