#include "qhcf/network.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhcf {

Network::Network(std::vector<BlockKind> blocks, int m) : blocks_(std::move(blocks)), m_(m) {
    if (m < 1) throw std::invalid_argument("Network: m must be >= 1");
}

Network Network::from_terms(const ContinuedFraction& cf, int m) {
    std::vector<BlockKind> blocks;
    const auto& terms = cf.terms();
    for (size_t t = 0; t < terms.size(); ++t)
        blocks.insert(blocks.end(), static_cast<size_t>(terms[t]),
                      t % 2 == 0 ? BlockKind::DownRungs : BlockKind::UpRungs);
    return Network(std::move(blocks), m);
}

PolyMatrix Network::path_weight_matrix() const {
    int dim = strands();
    PolyMatrix mat = PolyMatrix::identity(dim);
    // One rung column at a time: first slide along the rungs (prefix sums in
    // the rung direction), then advance every strand by its weighted
    // horizontal edge.
    for (size_t x = 0; x < blocks_.size(); ++x) {
        PolyMatrix next(dim);
        for (int i = 1; i <= dim; ++i) {
            if (blocks_[x] == BlockKind::DownRungs) {
                LaurentPoly acc;
                for (int s = 1; s <= dim; ++s) {
                    acc += mat.entry(i, s);
                    next.entry(i, s) = acc.shifted(m_ + 1 - s);
                }
            } else {
                LaurentPoly acc;
                for (int s = dim; s >= 1; --s) {
                    acc += mat.entry(i, s);
                    next.entry(i, s) = acc.shifted(m_ + 1 - s);
                }
            }
        }
        mat = next;
    }
    return mat;
}

std::vector<NetworkPath> Network::paths(int source, int sink) const {
    if (source < 1 || source > strands() || sink < 1 || sink > strands())
        throw std::out_of_range("Network::paths: strand out of range");
    std::vector<NetworkPath> out;
    int T = columns();
    NetworkPath cur;
    // At column x on strand s, either move right or (for 1 <= x <= T) slide
    // along the column's rungs before moving right.  Slides within a column
    // are monotone, so enumerate the reachable strand interval directly.
    auto rec = [&](auto&& self, int x, int s) -> void {
        cur.emplace_back(x, s);
        if (x == T + 1) {
            if (s == sink) out.push_back(cur);
            cur.pop_back();
            return;
        }
        if (x == 0) {
            self(self, 1, s);
        } else {
            bool down = blocks_[static_cast<size_t>(x) - 1] == BlockKind::DownRungs;
            if (down) {
                for (int t = s; t <= strands(); ++t) {
                    for (int u = s + 1; u <= t; ++u) cur.emplace_back(x, u);
                    self(self, x + 1, t);
                    for (int u = s + 1; u <= t; ++u) cur.pop_back();
                }
            } else {
                for (int t = s; t >= 1; --t) {
                    for (int u = s - 1; u >= t; --u) cur.emplace_back(x, u);
                    self(self, x + 1, t);
                    for (int u = s - 1; u >= t; --u) cur.pop_back();
                }
            }
        }
        cur.pop_back();
    };
    rec(rec, 0, source);
    return out;
}

int Network::path_exponent(const NetworkPath& p) const {
    int e = 0;
    for (size_t t = 0; t + 1 < p.size(); ++t)
        if (p[t + 1].first == p[t].first + 1) e += horizontal_exponent(p[t].first, p[t].second);
    return e;
}

LaurentPoly Network::minor_by_paths(std::array<int, 2> rows, std::array<int, 2> cols) const {
    if (rows[0] >= rows[1] || cols[0] >= cols[1])
        throw std::invalid_argument("minor_by_paths: index pairs must be increasing");
    auto key = [this](const NetworkPath& p) {
        std::vector<int> ids;
        ids.reserve(p.size());
        for (auto [x, s] : p) ids.push_back(x * strands() + s - 1);
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    std::vector<NetworkPath> p1 = paths(rows[0], cols[0]);
    std::vector<NetworkPath> p2 = paths(rows[1], cols[1]);
    std::vector<std::vector<int>> k1, k2;
    for (const auto& p : p1) k1.push_back(key(p));
    for (const auto& p : p2) k2.push_back(key(p));

    LaurentPoly total;
    for (size_t s = 0; s < p1.size(); ++s) {
        int e1 = path_exponent(p1[s]);
        for (size_t t = 0; t < p2.size(); ++t) {
            std::vector<int> common;
            std::set_intersection(k1[s].begin(), k1[s].end(), k2[t].begin(), k2[t].end(),
                                  std::back_inserter(common));
            if (!common.empty()) continue;
            total += LaurentPoly::monomial(1, e1 + path_exponent(p2[t]));
        }
    }
    return total;
}

std::string Network::to_dot() const {
    std::ostringstream os;
    os << "digraph network {\n  rankdir=LR;\n  node [shape=point];\n";
    int T = columns();
    for (int x = 0; x <= T + 1; ++x)
        for (int s = 1; s <= strands(); ++s)
            os << "  v" << x << "_" << s << " [pos=\"" << x << "," << (strands() - s) << "!\"];\n";
    for (int x = 0; x <= T; ++x)
        for (int s = 1; s <= strands(); ++s) {
            os << "  v" << x << "_" << s << " -> v" << x + 1 << "_" << s;
            int e = horizontal_exponent(x, s);
            if (e > 0) os << " [label=\"q^" << e << "\"]";
            os << ";\n";
        }
    for (int x = 1; x <= T; ++x) {
        bool down = blocks_[static_cast<size_t>(x) - 1] == BlockKind::DownRungs;
        for (int s = 1; s < strands(); ++s) {
            if (down)
                os << "  v" << x << "_" << s << " -> v" << x << "_" << s + 1 << ";\n";
            else
                os << "  v" << x << "_" << s + 1 << " -> v" << x << "_" << s << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace qhcf
