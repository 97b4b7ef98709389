#ifndef MODPHI_MULTIGRAPH_HPP
#define MODPHI_MULTIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "modphi/setpartition.hpp"

namespace modphi {

// Multigraph with loops; edges are an explicit multiset of unordered pairs.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw validation_error("edge endpoint out of range");
        edges.push_back({u, v});
    }
    int edge_count() const { return (int)edges.size(); }
    bool connected() const;

    MultiGraph contract(const SetPartition& pi) const; // intra-block edges dropped
    MultiGraph induced(const std::vector<int>& verts) const;
};

MultiGraph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// F_H = sum over connected spanning edge subsets E of (-1)^{|E| - |V| + 1}.
// Subset enumeration for |E| <= 24, deletion-contraction for larger inputs;
// the two paths agree (tested).
long long f_functional(const MultiGraph& H);
long long f_functional_subsets(const MultiGraph& H);        // exposed for cross-checks
long long f_functional_deletion_contraction(const MultiGraph& H);

// Number of spanning trees with edge multiplicity, by the matrix-tree
// determinant on the integer Laplacian (loops ignored); 0 when disconnected.
long long spanning_tree_count(const MultiGraph& H);
long long spanning_tree_count_deletion_contraction(const MultiGraph& H);

// lhs = 2^{r-1} ST_H, rhs = sum over set partitions pi of ST_{H/pi} prod_i
// ST_{H[pi_i]}; vertex count r <= 9.
std::pair<long long, long long> bicolored_identity_check(const MultiGraph& H);

// Tutte polynomial evaluated at (x, y), x, y in {0, 1}, by memoized
// deletion-contraction. Requires H connected and |E| <= 20.
long long tutte_point(const MultiGraph& H, int x, int y);

} // namespace modphi

#endif
