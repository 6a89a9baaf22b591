#include <doctest.h>

#include <algorithm>
#include <set>

#include "qhcf/border_strip.hpp"
#include "qhcf/errors.hpp"
#include "qhcf/qnum.hpp"
#include "test_util.hpp"

using namespace qhcf;
using testutil::Rng;

namespace {

LaurentPoly poly(std::vector<BigInt> c) { return LaurentPoly::from_coeffs(0, std::move(c)); }

BorderStrip strip_of(std::vector<int> terms) { return BorderStrip(ContinuedFraction(std::move(terms))); }

}  // namespace

TEST_CASE("continued fraction expansion") {
    CHECK(ContinuedFraction::from_rational(5, 2).terms() == std::vector<int>{2, 2});
    CHECK(ContinuedFraction::from_rational(7, 3).terms() == std::vector<int>{2, 3});
    CHECK(ContinuedFraction::from_rational(17, 3).terms() == std::vector<int>{5, 1, 2});
    CHECK(ContinuedFraction::from_rational(10, 4).terms() == std::vector<int>{2, 2});
    CHECK(ContinuedFraction::from_rational(5, 5).terms() == std::vector<int>{1});
    CHECK(ContinuedFraction::from_rational(4, 1).terms() == std::vector<int>{4});
    CHECK_THROWS_AS(ContinuedFraction::from_rational(2, 3), InvalidRational);
    CHECK_THROWS_AS(ContinuedFraction::from_rational(1, 0), InvalidRational);
    CHECK_THROWS_AS(ContinuedFraction({2, 0, 1}), InvalidRational);
}

TEST_CASE("continued fraction forms and value") {
    CHECK(ContinuedFraction({2, 1, 1}).canonical().terms() == std::vector<int>{2, 2});
    CHECK(ContinuedFraction({1, 1}).canonical().terms() == std::vector<int>{2});
    CHECK(ContinuedFraction({5, 1, 2}).value() == BigRational(17, 3));
    CHECK(ContinuedFraction({2, 2}).even_length().terms() == std::vector<int>{2, 2});
    CHECK(ContinuedFraction({5, 1, 2}).even_length().terms() == std::vector<int>{5, 1, 1, 1});
    CHECK(ContinuedFraction({3}).even_length().terms() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(ContinuedFraction({1}).even_length(), InvalidRational);
    // Last term >= 2 out of the Euclidean expansion whenever n >= 2.
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        int s = rng.range(1, 30);
        int r = s * rng.range(1, 6) + rng.range(0, s - 1);
        auto cf = ContinuedFraction::from_rational(r, s);
        if (cf.size() >= 2) CHECK(cf.terms().back() >= 2);
        CHECK(cf.value() == BigRational(r, s) / gcd(BigInt(r), BigInt(s)) * gcd(BigInt(r), BigInt(s)));
        CHECK(cf.value() == BigRational(r, s));
    }
}

TEST_CASE("border strip geometry") {
    BorderStrip g = strip_of({5, 3, 2, 4});
    CHECK(g.size() == 13);
    std::vector<std::pair<int, int>> want{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 1}, {4, 2},
                                          {4, 3}, {5, 3}, {6, 3}, {6, 4}, {6, 5}, {6, 6}};
    CHECK(g.cells() == want);

    BorderStrip small = strip_of({2, 2});
    CHECK(small.cells() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}});

    CHECK(strip_of({1}).size() == 0);
    CHECK(strip_of({2}).cells() == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(strip_of({4}).size() == 3);
}

TEST_CASE("strip invariants on random term lists") {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        BorderStrip g(testutil::random_cf(rng, 5, 4));
        CHECK(g.size() == g.terms().term_sum() - 1);
        // consecutive cells differ by one step up or right
        for (size_t c = 0; c + 1 < g.cells().size(); ++c) {
            auto [r1, c1] = g.cells()[c];
            auto [r2, c2] = g.cells()[c + 1];
            CHECK(((r2 == r1 + 1 && c2 == c1) || (r2 == r1 && c2 == c1 + 1)));
        }
        // no 2x2 block
        std::set<std::pair<int, int>> cells(g.cells().begin(), g.cells().end());
        for (auto [r, c] : cells)
            CHECK_FALSE((cells.count({r + 1, c}) && cells.count({r, c + 1}) &&
                         cells.count({r + 1, c + 1})));
    }
}

TEST_CASE("the fourteen P-partitions of the three-cell strip") {
    BorderStrip g = strip_of({2, 2});
    auto all = enumerate_ppartitions(g, 2);
    CHECK(all.size() == 14);
    std::set<Labels> got(all.begin(), all.end());
    // Cell order: bottom, top-left, top-right.
    std::set<Labels> want{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 0, 0}, {1, 0, 1},
                          {0, 0, 2}, {2, 0, 1}, {1, 1, 1}, {1, 0, 2}, {2, 1, 1},
                          {2, 0, 2}, {1, 1, 2}, {2, 1, 2}, {2, 2, 2}};
    CHECK(got == want);
    CHECK(enumerate_ppartitions(g, 0) == std::vector<Labels>{{0, 0, 0}});
    CHECK(enumerate_ppartitions(strip_of({1}), 3) == std::vector<Labels>{{}});
}

TEST_CASE("enumeration is duplicate-free and deterministic") {
    BorderStrip g = strip_of({2, 1, 2});
    auto all = enumerate_ppartitions(g, 3);
    std::set<Labels> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
    for (const auto& l : all) CHECK(is_ppartition(g, l, 3));
    CHECK(enumerate_ppartitions(g, 3) == all);
}

TEST_CASE("restricted generating functions of the three-cell strip") {
    BorderStrip g = strip_of({2, 2});
    CHECK(omega_gf(g, 2, 1, 1) == poly({1, 2, 3, 3, 3, 1, 1}));
    CHECK(omega_gf(g, 2, 2, 1) == poly({1, 2, 2, 2, 1}));
    CHECK(omega_gf(g, 2, 1, 2).eval_one() == 8);
    CHECK(omega_gf(g, 2, 1, 1, OmegaVariant::Bar) == omega_gf(g, 2, 1, 1));
    CHECK_THROWS_AS(omega_gf(g, 2, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(omega_gf(g, 2, 1, 4), IndexOutOfRange);
}

TEST_CASE("chains: generating function is a q-multichoose") {
    for (int p = 0; p <= 6; ++p) {
        BorderStrip chain = strip_of({p + 1});
        CHECK(chain.size() == p);
        for (int m = 0; m <= 4; ++m) {
            LaurentPoly gf;
            for_each_ppartition(chain, m, [&](const Labels& l) {
                gf += LaurentPoly::monomial(1, static_cast<int>(weight(l)));
            });
            CHECK(gf == qmultichoose(p + 1, m));
        }
    }
}

TEST_CASE("chains with parts in a shifted range") {
    for (int p = 1; p <= 5; ++p) {
        BorderStrip chain = strip_of({p + 1});
        for (int r = 0; r <= 3; ++r)
            for (int s = r; s <= r + 3; ++s) {
                LaurentPoly gf;
                for_each_ppartition(chain, s, [&](const Labels& l) {
                    if (std::all_of(l.begin(), l.end(), [&](int x) { return x >= r; }))
                        gf += LaurentPoly::monomial(1, static_cast<int>(weight(l)));
                });
                CHECK(gf == qmultichoose(p + 1, s - r).shifted(p * r));
            }
    }
}

TEST_CASE("empty strip convention matches the single-factor matrix entries") {
    BorderStrip empty = strip_of({1});
    for (int m = 1; m <= 3; ++m)
        for (int i = 1; i <= m + 1; ++i)
            for (int j = 1; j <= m + 1; ++j) {
                LaurentPoly want = qmultichoose(1, m + 2 - i - j);
                CHECK(omega_gf(empty, m, i, j) == want);
                CHECK(omega_gf(empty, m, i, j, OmegaVariant::Bar) == want);
            }
}

TEST_CASE("containment makes coefficients monotone in the restrictions") {
    BorderStrip g = strip_of({2, 3, 1});
    int m = 3;
    auto leq = [](const LaurentPoly& a, const LaurentPoly& b) {
        for (int k = std::min(a.min_degree(), b.min_degree());
             k <= std::max(a.max_degree(), b.max_degree()); ++k)
            if (a.coeff(k) > b.coeff(k)) return false;
        return true;
    };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m + 1; ++j) CHECK(leq(omega_gf(g, m, i + 1, j), omega_gf(g, m, i, j)));
    for (int i = 1; i <= m + 1; ++i)
        for (int j = 1; j <= m; ++j) CHECK(leq(omega_gf(g, m, i, j + 1), omega_gf(g, m, i, j)));
}

TEST_CASE("omega_table agrees with individual calls") {
    for (auto& terms : {std::vector<int>{2, 2}, std::vector<int>{3, 1, 2}, std::vector<int>{1}}) {
        BorderStrip g = strip_of(terms);
        for (int m = 1; m <= 3; ++m)
            for (auto variant : {OmegaVariant::Plain, OmegaVariant::Bar}) {
                auto table = omega_table(g, m, variant);
                for (int i = 1; i <= m + 1; ++i)
                    for (int j = 1; j <= m + 1; ++j)
                        CHECK(table[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] ==
                              omega_gf(g, m, i, j, variant));
            }
    }
}

TEST_CASE("ascii rendering smoke") {
    CHECK(strip_of({1}).ascii() == "(empty strip)\n");
    std::string a = strip_of({2, 2}).ascii();
    CHECK(a == "[ ][ ]\n[ ]   \n");
    CHECK(strip_of({2, 2}).ascii({2, 0, 1}) == "[0][1]\n[2]   \n");
}
