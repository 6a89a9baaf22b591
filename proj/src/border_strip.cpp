#include "qhcf/border_strip.hpp"

#include <algorithm>
#include <sstream>

#include "qhcf/errors.hpp"

namespace qhcf {

BorderStrip::BorderStrip(const ContinuedFraction& terms) : terms_(terms) {
    const auto& a = terms.terms();
    int n = static_cast<int>(a.size());
    if (n == 1) {
        // Straight vertical column of a_1 - 1 cells.
        for (int t = 0; t < a[0] - 2; ++t) steps_.push_back(Step::Up);
    } else {
        for (int t = 0; t < a[0] - 1; ++t) steps_.push_back(Step::Up);
        for (int k = 2; k <= n; ++k) {
            Step dir = (k % 2 == 0) ? Step::Right : Step::Up;
            int count = (k == n) ? a[static_cast<size_t>(k) - 1] - 1 : a[static_cast<size_t>(k) - 1];
            for (int t = 0; t < count; ++t) steps_.push_back(dir);
        }
    }
    bool empty = (n == 1 && a[0] == 1);
    if (!empty) {
        int row = 0, col = 0;
        cells_.emplace_back(row, col);
        for (Step s : steps_) {
            if (s == Step::Up)
                ++row;
            else
                ++col;
            cells_.emplace_back(row, col);
        }
    }
}

std::string BorderStrip::ascii() const { return ascii({}); }

std::string BorderStrip::ascii(const std::vector<int>& labels) const {
    if (cells_.empty()) return "(empty strip)\n";
    int max_row = 0, max_col = 0;
    for (auto [r, c] : cells_) {
        max_row = std::max(max_row, r);
        max_col = std::max(max_col, c);
    }
    std::vector<std::vector<int>> grid(static_cast<size_t>(max_row) + 1,
                                       std::vector<int>(static_cast<size_t>(max_col) + 1, -1));
    for (size_t t = 0; t < cells_.size(); ++t)
        grid[static_cast<size_t>(cells_[t].first)][static_cast<size_t>(cells_[t].second)] =
            labels.empty() ? -2 : labels[t];
    std::ostringstream os;
    for (int r = max_row; r >= 0; --r) {
        for (int c = 0; c <= max_col; ++c) {
            int v = grid[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (v == -1)
                os << "   ";
            else if (v == -2)
                os << "[ ]";
            else
                os << '[' << v << ']';
        }
        os << '\n';
    }
    return os.str();
}

int common_cells(const BorderStrip& a, const BorderStrip& b) {
    if (a.size() == 0 || b.size() == 0) return 0;
    int t = 0;
    int limit = std::min(static_cast<int>(a.steps().size()), static_cast<int>(b.steps().size()));
    while (t < limit && a.steps()[static_cast<size_t>(t)] == b.steps()[static_cast<size_t>(t)]) ++t;
    return t + 1;
}

long weight(const Labels& labels) {
    long w = 0;
    for (int l : labels) w += l;
    return w;
}

bool is_ppartition(const BorderStrip& strip, const Labels& labels, int m) {
    if (static_cast<int>(labels.size()) != strip.size()) return false;
    for (int l : labels)
        if (l < 0 || l > m) return false;
    for (size_t t = 0; t < strip.steps().size(); ++t) {
        if (strip.steps()[t] == Step::Up) {
            if (labels[t + 1] > labels[t]) return false;
        } else {
            if (labels[t + 1] < labels[t]) return false;
        }
    }
    return true;
}

void for_each_ppartition(const BorderStrip& strip, int m,
                         const std::function<void(const Labels&)>& visit) {
    int n = strip.size();
    Labels labels(static_cast<size_t>(n));
    if (n == 0) {
        visit(labels);
        return;
    }
    const auto& steps = strip.steps();
    // Recursive descent; at each cell the admissible labels form an interval
    // determined by the incoming step, visited high-to-low.
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            visit(labels);
            return;
        }
        int lo = 0, hi = m;
        if (t > 0) {
            if (steps[static_cast<size_t>(t) - 1] == Step::Up)
                hi = labels[static_cast<size_t>(t) - 1];
            else
                lo = labels[static_cast<size_t>(t) - 1];
        }
        for (int l = hi; l >= lo; --l) {
            labels[static_cast<size_t>(t)] = l;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Labels> enumerate_ppartitions(const BorderStrip& strip, int m) {
    std::vector<Labels> out;
    for_each_ppartition(strip, m, [&](const Labels& l) { out.push_back(l); });
    return out;
}

namespace {

void check_indices(int m, int i, int j) {
    if (i < 1 || i > m + 1 || j < 1 || j > m + 1)
        throw IndexOutOfRange("omega_gf: indices must be in 1..m+1");
}

LaurentPoly empty_strip_gf(int m, int i, int j) {
    return (m + 2 - i - j >= 0) ? LaurentPoly(1) : LaurentPoly();
}

}  // namespace

LaurentPoly omega_gf(const BorderStrip& strip, int m, int i, int j, OmegaVariant variant) {
    check_indices(m, i, j);
    if (strip.size() == 0) return empty_strip_gf(m, i, j);
    std::vector<BigInt> by_weight(static_cast<size_t>(m) * strip.size() + 1);
    int first_max = m + 1 - i;
    for_each_ppartition(strip, m, [&](const Labels& l) {
        if (l.front() > first_max) return;
        if (variant == OmegaVariant::Plain ? (l.back() <= m + 1 - j) : (l.back() >= j - 1))
            by_weight[static_cast<size_t>(weight(l))] += 1;
    });
    return LaurentPoly::from_coeffs(0, std::move(by_weight));
}

std::vector<std::vector<LaurentPoly>> omega_table(const BorderStrip& strip, int m,
                                                  OmegaVariant variant) {
    std::vector<std::vector<LaurentPoly>> table(
        static_cast<size_t>(m) + 1, std::vector<LaurentPoly>(static_cast<size_t>(m) + 1));
    if (strip.size() == 0) {
        for (int i = 1; i <= m + 1; ++i)
            for (int j = 1; j <= m + 1; ++j)
                table[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = empty_strip_gf(m, i, j);
        return table;
    }
    // One pass: bucket weight vectors by (first label, last label), then
    // assemble each (i, j) restriction from the buckets.
    size_t wmax = static_cast<size_t>(m) * strip.size() + 1;
    std::vector<std::vector<std::vector<BigInt>>> bucket(
        static_cast<size_t>(m) + 1,
        std::vector<std::vector<BigInt>>(static_cast<size_t>(m) + 1, std::vector<BigInt>(wmax)));
    for_each_ppartition(strip, m, [&](const Labels& l) {
        bucket[static_cast<size_t>(l.front())][static_cast<size_t>(l.back())]
              [static_cast<size_t>(weight(l))] += 1;
    });
    for (int i = 1; i <= m + 1; ++i) {
        for (int j = 1; j <= m + 1; ++j) {
            std::vector<BigInt> acc(wmax);
            for (int f = 0; f <= m + 1 - i; ++f) {
                int lo = (variant == OmegaVariant::Plain) ? 0 : j - 1;
                int hi = (variant == OmegaVariant::Plain) ? m + 1 - j : m;
                for (int last = std::max(lo, 0); last <= hi; ++last)
                    for (size_t w = 0; w < wmax; ++w)
                        acc[w] += bucket[static_cast<size_t>(f)][static_cast<size_t>(last)][w];
            }
            table[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
                LaurentPoly::from_coeffs(0, std::move(acc));
        }
    }
    return table;
}

}  // namespace qhcf
