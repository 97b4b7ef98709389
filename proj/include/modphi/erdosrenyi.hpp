#ifndef MODPHI_ERDOSRENYI_HPP
#define MODPHI_ERDOSRENYI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modphi/deviation.hpp"
#include "modphi/rational.hpp"

namespace modphi {

// Fixed simple pattern graph on [k].
struct PatternGraph {
    int k;
    std::vector<std::pair<int, int>> edges;
    int h() const { return (int)edges.size(); }
};

PatternGraph pattern_edge();
PatternGraph pattern_triangle();
PatternGraph pattern_path3(); // path on three vertices
PatternGraph pattern_from_edges(int k, const std::vector<std::pair<int, int>>& edges);

// Sampled graph as adjacency bitset rows (n <= 4096).
struct SampledGraph {
    int n;
    std::vector<std::vector<std::uint64_t>> rows;
    bool has_edge(int i, int j) const { return rows[i][j >> 6] >> (j & 63) & 1; }
};

SampledGraph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t stream = 0);

// Number of ordered arrangements (a_1..a_k) of distinct vertices with the
// pattern contained in the induced graph: each unlabeled copy counts once per
// compatible vertex ordering.
long long count_copies(const SampledGraph& g, const PatternGraph& pattern);

// arrangement count of triangles = 2 sum_edges popcount(row_i & row_j)
long long count_triangle_arrangements(const SampledGraph& g);

struct SubgraphCumulants {
    int n;
    Rational kappa1, kappa2, kappa3;
    std::string method;
};

// Exact kappa^(1..3) by direct expectation over all 2^C(n,2) graphs with
// rational p; n <= 6.
SubgraphCumulants exact_cumulants_bruteforce(int n, const PatternGraph& pattern,
                                             const Rational& p);

// Independent oracle: the graph-classification sum over vertex gluing
// patterns, giving kappa^(r) as an exact polynomial in n (valid at every n).
// coeffs[j] multiplies n^j.
std::vector<Rational> cumulant_polynomial(const PatternGraph& pattern, const Rational& p, int r);
Rational eval_polynomial(const std::vector<Rational>& coeffs, long long n);

struct McCumulants {
    double kappa1, kappa2, kappa3;
    double se1, se2, se3; // delete-block jackknife standard errors
    std::int64_t trials;
};

McCumulants mc_cumulants(int n, const PatternGraph& pattern, double p, std::int64_t trials,
                         std::uint64_t seed, bool parallel = true);

// sigma^2 = 2 h^2 p^{2h-1}(1-p);
// L = 12 h^3 (h-1) p^{3h-2} (1-p)^2 + 4 h^3 p^{3h-2} (1-p)(1-2p)
std::pair<double, double> sigma2_L(const PatternGraph& pattern, double p);
std::pair<Rational, Rational> sigma2_L_rational(const PatternGraph& pattern, const Rational& p);

// The triangle moderate-deviation display
//   P[T_n >= n^3 p^3 + n^2 (v - 3 p^3)] ~
//   sqrt(9 p^5 (1-p) / (pi v^2)) exp(-v^2/(36 p^5 (1-p))
//                                    + (7-8p) v^3/(324 n p^8 (1-p)^2)).
DeviationEstimate triangle_deviation(long long n, double p, double v);

// Monte Carlo estimate of P[T_n >= threshold] over sampled graphs.
struct McTail {
    double tail;
    double stderr_;
    std::int64_t hits, trials;
};
McTail mc_triangle_tail(int n, double p, double threshold, std::int64_t trials,
                        std::uint64_t seed, bool parallel = true);

struct PolynomialFit {
    std::vector<Rational> coeffs; // monomial basis
    Rational residual_at_holdout;
};

// Interpolate exact cumulant values (from the brute force) through points
// n_list and report the residual at a held-out n against the closed-form
// oracle polynomial.
PolynomialFit polynomiality_check(const PatternGraph& pattern, const Rational& p, int r,
                                  const std::vector<int>& n_list, int holdout_n);

// overlap-class closed forms for kappa^2, valid at every n
Rational triangle_kappa2_closed_form(long long n, const Rational& p);
Rational edge_kappa2_closed_form(long long n, const Rational& p);

} // namespace modphi

#endif
