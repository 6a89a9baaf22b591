// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything is exact arithmetic, so checks are equalities; each criterion
// also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qhcf/border_strip.hpp"
#include "qhcf/higher_cf.hpp"
#include "qhcf/network.hpp"
#include "qhcf/positivity.hpp"
#include "qhcf/qnum.hpp"
#include "qhcf/stabilization.hpp"
#include "qhcf/transfer_matrix.hpp"
#include "test_util.hpp"

using namespace qhcf;
using testutil::Rng;

namespace {

LaurentPoly poly(std::vector<BigInt> c) { return LaurentPoly::from_coeffs(0, std::move(c)); }

bool criterion1() {
    std::vector<std::vector<BigInt>> want{{14, 8, 3}, {8, 5, 2}, {3, 2, 1}};
    return product_x(ContinuedFraction({2, 2}), 2).eval_one() == want;
}

bool criterion2() {
    ContinuedFraction cf({2, 2});
    BorderStrip strip(cf);
    LaurentPoly want11 = poly({1, 2, 3, 3, 3, 1, 1});
    LaurentPoly want21 = poly({1, 2, 2, 2, 1});
    if (omega_gf(strip, 2, 1, 1) != want11) return false;
    if (omega_gf(strip, 2, 2, 1) != want21) return false;
    PolyMatrix x = product_x(cf, 2);  // n even: entry (i,j) is q^(m+1-j) * gf
    return x.entry(1, 1) == want11.shifted(2) && x.entry(2, 1) == want21.shifted(2);
}

bool criterion3() {
    RatFunc m52 = hcf_q_matrix(ContinuedFraction({2, 2}), 2, 2);
    RatFunc r52 = hcf_q_recursive(ContinuedFraction({2, 2}), 2, 2);
    RatFunc m73 = hcf_q_matrix(ContinuedFraction({2, 3}), 2, 2);
    RatFunc r73 = hcf_q_recursive(ContinuedFraction({2, 3}), 2, 2);
    return m52.num() == poly({1, 2, 3, 3, 3, 1, 1}) && m52.den() == poly({1, 1, 1}) &&
           m73.num() == poly({1, 2, 4, 4, 5, 4, 3, 1, 1}) &&
           m73.den() == poly({1, 1, 2, 1, 1}) && r52 == m52 && r73 == m73;
}

bool criterion4() {
    return hcf_q1_vector(ContinuedFraction::from_rational(17, 3), 2) ==
           std::vector<BigRational>{BigRational(59, 3), BigRational(35, 6), BigRational(1)};
}

bool criterion5() {
    PositivityProblem prob(5, 2, 7, 3, 2, 2);
    LaurentPoly diff = prob.difference();
    if (diff != LaurentPoly::from_coeffs(3, {1, 2, 2, 2, 1, 1})) return false;
    auto pairs = prob.complement_pairs();
    if (pairs.size() != 9) return false;
    LaurentPoly gf;
    for (const auto& p : pairs)
        gf += LaurentPoly::monomial(
            1, static_cast<int>(weight(p.left.labels) + weight(p.right.labels)));
    return gf == diff;
}

bool criterion6() {
    IrrationalCF phi({}, std::vector<int>{1});
    std::vector<BigInt> want2{1, 0, 1, 0, 1, -1, 0, 1, -3, 6, -10, 17, -24, 25, -15, -21, 107};
    std::vector<BigInt> want1{1, 0, 1, 0, 0, 0, -1, 2, -4, 7, -9, 11, -11, 2, 22, -74, 171};
    return stable_series(phi, 2, 2, 16).coeffs == want2 &&
           stable_series(phi, 1, 2, 16).coeffs == want1;
}

bool criterion7() {
    IrrationalCF x({1, 3, 15}, std::vector<int>{1, 3, 3});
    std::vector<BigInt> want{1, 0, 0,  0,  1, 0, -1, -1, 1, 2,
                             0, -3, -2, 3, 5, -1, -8, -4, 9, 11};
    return stable_series(x, 1, 1, 19).coeffs == want;
}

bool criterion8() {
    for (int n = 1; n <= 4; ++n)
        for (const auto& terms : testutil::all_term_lists(n, 3)) {
            ContinuedFraction cf(terms);
            BorderStrip strip(cf);
            bool even = n % 2 == 0;
            for (int m = 1; m <= 3; ++m) {
                PolyMatrix x = product_x(cf, m);
                auto table =
                    omega_table(strip, m, even ? OmegaVariant::Plain : OmegaVariant::Bar);
                for (int i = 1; i <= m + 1; ++i)
                    for (int j = 1; j <= m + 1; ++j) {
                        int shift = even ? m + 1 - j : j - 1;
                        if (x.entry(i, j) !=
                            table[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1]
                                .shifted(shift))
                            return false;
                    }
            }
        }
    return true;
}

bool criterion9() {
    Rng rng(2024);
    int done = 0;
    while (done < 50) {
        ContinuedFraction cf = testutil::random_cf(rng, 8, 3);
        if (cf.size() < 2) continue;
        ++done;
        int n = cf.size();
        long bound = (n % 2 == 0) ? cf.term_sum() - 1 : cf.prefix(n - 1).term_sum() - 1;
        int cap = static_cast<int>(bound) + 3;
        for (int i = 1; i <= 3; ++i) {
            int shared = -1;
            for (int m = std::max(1, i); m <= 3; ++m) {
                int d = agreement_degree(cf, cf.prefix(n - 1), i, m, cap);
                if (d < bound) return false;
                if (shared < 0) shared = d;
                if (d != shared) return false;  // the degree must not depend on m
            }
        }
    }
    return true;
}

bool criterion10() {
    Rng rng(4096);
    for (int t = 0; t < 20; ++t) {
        int m = rng.range(1, 3);
        std::vector<int> terms;
        int total = 0;
        int n = 2 * rng.range(1, 2);
        for (int u = 0; u < n; ++u) {
            int a = rng.range(1, 2);
            terms.push_back(a);
            total += a;
        }
        ContinuedFraction cf(terms);
        Network net = Network::from_terms(cf, m);
        PolyMatrix x = net.path_weight_matrix();  // equals the matrix product (n even)
        for (int i1 = 1; i1 <= m; ++i1)
            for (int i2 = i1 + 1; i2 <= m + 1; ++i2)
                for (int j1 = 1; j1 <= m; ++j1)
                    for (int j2 = j1 + 1; j2 <= m + 1; ++j2) {
                        LaurentPoly det = x.entry(i1, j1) * x.entry(i2, j2) -
                                          x.entry(i1, j2) * x.entry(i2, j1);
                        if (net.minor_by_paths({i1, i2}, {j1, j2}) != det) return false;
                        if (j1 == 1 && j2 == m + 1 && !det.is_zero() &&
                            det.min_degree() < total + m - 1)
                            return false;
                    }
    }
    return true;
}

bool criterion11() {
    Rng rng(31337);
    std::vector<std::pair<int, int>> pool;
    for (int den = 1; den <= 5; ++den)
        for (int num = den; num <= std::min(9, 5 * den); ++num)
            if (gcd(BigInt(num), BigInt(den)) == 1) pool.emplace_back(num, den);

    int done = 0;
    while (done < 100) {
        auto [r, s] = pool[static_cast<size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
        auto [a, b] = pool[static_cast<size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
        if (r * b <= a * s) continue;
        ++done;
        for (int m = 1; m <= 3; ++m)
            for (int i = 0; i <= m; ++i) {
                PositivityProblem prob(r, s, a, b, i, m);
                LaurentPoly diff = prob.difference();
                if (!diff.nonnegative()) return false;

                std::set<std::pair<Labels, Labels>> image;
                for (const auto& p : prob.sa_pairs()) {
                    PartitionPair mapped = prob.inject(p);
                    if (weight(mapped.left.labels) + weight(mapped.right.labels) !=
                        weight(p.left.labels) + weight(p.right.labels))
                        return false;
                    if (!image.insert({mapped.left.labels, mapped.right.labels}).second)
                        return false;  // not injective
                }
                LaurentPoly gf;
                size_t complement_size = 0;
                for (const auto& p : prob.rb_pairs()) {
                    if (image.count({p.left.labels, p.right.labels})) continue;
                    ++complement_size;
                    gf += LaurentPoly::monomial(
                        1, static_cast<int>(weight(p.left.labels) + weight(p.right.labels)));
                }
                if (gf != diff) return false;
                if (prob.complement_pairs().size() != complement_size) return false;
            }
    }
    return true;
}

struct Criterion {
    int number;
    std::string label;
    double budget_ms;
    std::function<bool()> check;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "matrix product for [2,2] at q=1", 1.0, criterion1},
        {2, "restricted generating functions, brute force and matrix", 10.0, criterion2},
        {3, "higher q-fraction routes for 5/2 and 7/3", 10.0, criterion3},
        {4, "rational vector for 17/3", 1.0, criterion4},
        {5, "positivity difference and its nine pairs", 100.0, criterion5},
        {6, "golden ratio series through q^16", 1000.0, criterion6},
        {7, "sec(7) series through q^19", 1000.0, criterion7},
        {8, "matrix entries equal shifted brute-force sums, full grid", 60000.0, criterion8},
        {9, "agreement degree bound, 50 random prefixes", 60000.0, criterion9},
        {10, "path-pair minors and divisibility, 20 networks", 60000.0, criterion10},
        {11, "positivity sweep, 100 random pairs", 120000.0, criterion11},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            std::printf("FAIL %2d  %s (exception: %s)\n", c.number, c.label.c_str(), e.what());
            ++failures;
            continue;
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        bool in_budget = ms < c.budget_ms;
        if (ok && in_budget) {
            std::printf("PASS %2d  %s (%.2f ms)\n", c.number, c.label.c_str(), ms);
        } else {
            std::printf("FAIL %2d  %s (%.2f ms%s)\n", c.number, c.label.c_str(), ms,
                        ok ? ", over budget" : "");
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
