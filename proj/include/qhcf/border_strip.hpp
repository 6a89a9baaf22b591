#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qhcf/continued_fraction.hpp"
#include "qhcf/laurent_poly.hpp"

namespace qhcf {

enum class Step { Up, Right };

// The border strip (snake shape) of a term sequence [a_1, ..., a_n]: starting
// from one cell, a_1 - 1 up steps, then a_2 right steps, a_3 up, ...,
// with the final segment shortened by one step.  For n == 1 the strip is a
// vertical column of a_1 - 1 cells (empty when a_1 == 1).
//
// Cells are indexed 1..N from bottom-left to top-right and stored as
// (row, col) with row 0 at the bottom, increasing upward.
class BorderStrip {
public:
    explicit BorderStrip(const ContinuedFraction& terms);

    const ContinuedFraction& terms() const { return terms_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }
    // steps()[t] joins cell t+1 to cell t+2 (1-indexed cells).
    const std::vector<Step>& steps() const { return steps_; }

    // Grid picture, top row first.
    std::string ascii() const;
    std::string ascii(const std::vector<int>& labels) const;

private:
    ContinuedFraction terms_;
    std::vector<Step> steps_;
    std::vector<std::pair<int, int>> cells_;
};

// Number of common leading cells of two strips (their step sequences are
// compared; any two nonempty strips share at least the initial cell).
int common_cells(const BorderStrip& a, const BorderStrip& b);

using Labels = std::vector<int>;

struct PPartition {
    Labels labels;  // one label per cell, each in 0..bound
    int bound;      // the part bound m

    friend bool operator==(const PPartition&, const PPartition&) = default;
};

long weight(const Labels& labels);

// Labels are weakly increasing left-to-right in rows and top-to-bottom in
// columns; along the strip this means labels may not increase across an up
// step and may not decrease across a right step.
bool is_ppartition(const BorderStrip& strip, const Labels& labels, int m);

// Depth-first enumeration in cell-index order, labels descending at each
// cell; deterministic output order.  The empty strip yields one empty
// labeling.
void for_each_ppartition(const BorderStrip& strip, int m,
                         const std::function<void(const Labels&)>& visit);
std::vector<Labels> enumerate_ppartitions(const BorderStrip& strip, int m);

enum class OmegaVariant { Plain, Bar };

// Weight generating function over the P-partitions with first part at most
// m+1-i and (Plain) last part at most m+1-j / (Bar) last part at least j-1.
// Requires 1 <= i, j <= m+1.  For the empty strip the value is 1 when
// m+2-i-j >= 0 and 0 otherwise, matching the single-cell count formulas.
LaurentPoly omega_gf(const BorderStrip& strip, int m, int i, int j,
                     OmegaVariant variant = OmegaVariant::Plain);

// All (m+1) x (m+1) generating functions of one variant from a single
// enumeration pass; table[i-1][j-1] == omega_gf(strip, m, i, j, variant).
std::vector<std::vector<LaurentPoly>> omega_table(const BorderStrip& strip, int m,
                                                  OmegaVariant variant);

}  // namespace qhcf
