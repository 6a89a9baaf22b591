#include "qhcf/qnum.hpp"

#include <stdexcept>
#include <vector>

namespace qhcf {

LaurentPoly qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: n must be >= 0");
    std::vector<BigInt> coeffs(static_cast<size_t>(n), BigInt(1));
    return LaurentPoly::from_coeffs(0, std::move(coeffs));
}

LaurentPoly qbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return {};
    if (k == 0 || k == n) return LaurentPoly(1);
    // Row-by-row q-Pascal: binom(r,j)_q = binom(r-1,j-1)_q + q^j binom(r-1,j)_q.
    // No shared cache; cheap at the sizes that occur here and trivially
    // thread-safe.
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int r = 1; r <= n; ++r) {
        int jhi = std::min(r, k);
        std::vector<LaurentPoly> next(static_cast<size_t>(jhi) + 1);
        next[0] = LaurentPoly(1);
        for (int j = 1; j <= jhi; ++j) {
            LaurentPoly v = (j - 1 < static_cast<int>(row.size())) ? row[j - 1] : LaurentPoly();
            if (j < static_cast<int>(row.size())) v += row[j].shifted(j);
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[k];
}

LaurentPoly qmultichoose(int a, int k) { return qbinom(a + k - 1, k); }

}  // namespace qhcf
