#include "qhcf/positivity.hpp"

#include <stdexcept>

#include "qhcf/errors.hpp"
#include "qhcf/higher_cf.hpp"

namespace qhcf {

namespace {

ContinuedFraction cf_of(const BigInt& num, const BigInt& den) {
    return ContinuedFraction::from_rational(num, den);
}

}  // namespace

PositivityProblem::PositivityProblem(const BigInt& r, const BigInt& s, const BigInt& a,
                                     const BigInt& b, int i, int m)
    : left_(cf_of(r, s)), right_(cf_of(a, b)), i_(i), m_(m), d_(0) {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("need 0 <= i <= m, m >= 1");
    if (s <= 0 || b <= 0) throw InvalidRational("denominators must be positive");
    if (r * b <= a * s) throw OrderViolation("positivity needs r/s > a/b");
    d_ = common_cells(left_, right_);
}

LaurentPoly PositivityProblem::difference() const {
    RatFunc rs = hcf_q_matrix(left_.terms(), i_, m_);
    RatFunc ab = hcf_q_matrix(right_.terms(), i_, m_);
    LaurentPoly diff = ab.den() * rs.num() - ab.num() * rs.den();
    if (!diff.nonnegative())
        throw PositivityViolation("difference has a negative coefficient: " + diff.to_string());
    return diff;
}

std::vector<PartitionPair> PositivityProblem::product_pairs(int left_first_max,
                                                            int right_first_max) const {
    std::vector<Labels> lefts, rights;
    for_each_ppartition(left_, m_, [&](const Labels& l) {
        if (l.empty() || l.front() <= left_first_max) lefts.push_back(l);
    });
    for_each_ppartition(right_, m_, [&](const Labels& l) {
        if (l.empty() || l.front() <= right_first_max) rights.push_back(l);
    });
    std::vector<PartitionPair> out;
    out.reserve(lefts.size() * rights.size());
    for (const auto& l : lefts)
        for (const auto& r : rights)
            out.push_back(PartitionPair{PPartition{l, m_}, PPartition{r, m_}, d_});
    return out;
}

std::vector<PartitionPair> PositivityProblem::sa_pairs() const { return product_pairs(0, i_); }

std::vector<PartitionPair> PositivityProblem::rb_pairs() const { return product_pairs(i_, 0); }

PartitionPair PositivityProblem::swapped_at(const PartitionPair& pair, int j) const {
    PartitionPair out = pair;
    for (int t = 0; t < j; ++t)
        std::swap(out.left.labels[static_cast<size_t>(t)], out.right.labels[static_cast<size_t>(t)]);
    return out;
}

std::vector<int> PositivityProblem::swappable_positions(const PartitionPair& pair) const {
    std::vector<int> out;
    for (int j = 1; j <= d_; ++j) {
        PartitionPair cand = swapped_at(pair, j);
        if (is_ppartition(left_, cand.left.labels, m_) &&
            is_ppartition(right_, cand.right.labels, m_))
            out.push_back(j);
    }
    return out;
}

PartitionPair PositivityProblem::inject(const PartitionPair& pair) const {
    if (d_ == 0) return pair;  // empty right strip; S is contained in R
    std::vector<int> pos = swappable_positions(pair);
    if (pos.empty()) throw NoSwappablePosition("inject: pair has no swappable position");
    return swapped_at(pair, pos.front());
}

std::vector<PartitionPair> PositivityProblem::complement_pairs() const {
    std::vector<PartitionPair> out;
    for (const auto& pair : rb_pairs()) {
        if (d_ == 0) {
            // Image of the identity embedding is exactly the pairs whose
            // left partition also has first part 0.
            if (!pair.left.labels.empty() && pair.left.labels.front() > 0) out.push_back(pair);
            continue;
        }
        if (swappable_positions(pair).empty()) out.push_back(pair);
    }
    return out;
}

LaurentPoly positivity_difference(const BigInt& r, const BigInt& s, const BigInt& a,
                                  const BigInt& b, int i, int m) {
    return PositivityProblem(r, s, a, b, i, m).difference();
}

}  // namespace qhcf
