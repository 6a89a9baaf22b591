#pragma once

#include <array>
#include <string>
#include <vector>

#include "qhcf/continued_fraction.hpp"
#include "qhcf/transfer_matrix.hpp"

namespace qhcf {

// Rung column kind: DownRungs is the block whose path-weight matrix is
// R_m(q), UpRungs gives L_m(q).
enum class BlockKind { DownRungs, UpRungs };

// A path through the network, as the visited (column, strand) vertices.
using NetworkPath = std::vector<std::pair<int, int>>;

// Planar acyclic network of m+1 horizontal strands (numbered 1..m+1 top to
// bottom) crossed by T rung columns.  Vertex columns run 0..T+1; sources are
// column 0, sinks column T+1.  The horizontal edge leaving column x >= 1 on
// strand s carries weight q^(m+1-s); the entry edges (column 0) and all
// rungs carry weight 1.  Edge weights are stored as integer exponents.
class Network {
public:
    Network(std::vector<BlockKind> blocks, int m);

    // a_1 DownRungs columns, then a_2 UpRungs, alternating: the network
    // whose path-weight matrix is R^{a_1} L^{a_2} R^{a_3} ...
    static Network from_terms(const ContinuedFraction& cf, int m);

    int strands() const { return m_ + 1; }
    int columns() const { return static_cast<int>(blocks_.size()); }
    const std::vector<BlockKind>& blocks() const { return blocks_; }

    // Exponent of the horizontal edge from (x, s) to (x+1, s).
    int horizontal_exponent(int x, int s) const { return x == 0 ? 0 : m_ + 1 - s; }

    PolyMatrix path_weight_matrix() const;

    // All source->sink paths, in a deterministic order.
    std::vector<NetworkPath> paths(int source, int sink) const;
    int path_exponent(const NetworkPath& p) const;

    // det of the 2x2 submatrix with rows I and cols J, computed as the sum
    // of wt(p1) wt(p2) over vertex-disjoint path pairs p1: I[0] -> J[0],
    // p2: I[1] -> J[1].  Requires I[0] < I[1] and J[0] < J[1].
    LaurentPoly minor_by_paths(std::array<int, 2> rows, std::array<int, 2> cols) const;

    std::string to_dot() const;

private:
    std::vector<BlockKind> blocks_;
    int m_;
};

}  // namespace qhcf
