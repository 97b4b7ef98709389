#ifndef MODPHI_SETPARTITION_HPP
#define MODPHI_SETPARTITION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "modphi/rational.hpp"

namespace modphi {

// Set partition of [n] as disjoint nonempty blocks covering 0..n-1.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int n() const {
        int s = 0;
        for (const auto& b : blocks) s += (int)b.size();
        return s;
    }
};

// mu(pi, {[n]}) = (-1)^{#pi - 1} (#pi - 1)!
long long mobius(const SetPartition& pi);

// All set partitions of [n] in restricted-growth-string order. Bell(9) = 21147
// caps the usable n.
std::vector<SetPartition> set_partitions(int n);
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn);

// Family of random variables with a dependency graph and an exact
// mixed-moment oracle: indices may repeat, E[prod_i X_{idx_i}].
struct DependencyFamily {
    int N = 0;
    std::vector<std::pair<int, int>> edges; // dependency graph on 0..N-1
    std::function<Rational(const std::vector<int>&)> mixed_moment;
    // optional fast path: E[(sum_alpha Y_alpha)^m] in one sample-space sweep
    std::function<Rational(int)> power_moment;
    Rational bound_A; // uniform bound on the variables

    bool adjacent(int a, int b) const {
        for (auto [u, v] : edges)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    }
};

// Exact joint cumulant via the Moebius sum over set partitions of [r]:
// kappa(X_1..X_r) = sum_pi mu(pi) prod_B E[prod_{i in B} X_i]. r <= 9.
Rational joint_cumulant(const DependencyFamily& family, const std::vector<int>& indices);

// moment from cumulants: E[X_1..X_r] = sum_pi prod_B kappa(X_i; i in B)
Rational moment_from_cumulants(const std::function<Rational(const std::vector<int>&)>& kappa,
                               const std::vector<int>& indices);

// univariate helpers: cumulants kappa^(1..r) from raw moments m_1..m_r and back
std::vector<Rational> cumulants_from_moments(const std::vector<Rational>& moments);
std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& kappas);
std::vector<double> cumulants_from_moments(const std::vector<double>& moments);

// Janson-type bound with the sharp constant: 2^{r-1} r^{r-2} N (D+1)^{r-1} A^r.
Rational cumulant_bound(int N, int D, const Rational& A, int r);
double cumulant_bound(int N, int D, double A, int r);

struct BoundCheck {
    Rational exact_kappa;
    Rational bound;
    bool ok;
};

// Exact kappa^(r) of X = sum Y_alpha against the bound, with D read off the
// family's dependency graph.
BoundCheck verify_bound(const DependencyFamily& family, int r);

// Spot-check that the declared graph really is a dependency graph: for random
// separated index splits, the mixed moment factorizes.
bool check_dependency_graph(const DependencyFamily& family, int splits, std::uint64_t seed);

// Mod-Gaussian packaging of a sparse dependency-graph family:
// sigma_n^2 = (D/N) kappa^2(X/D), L_n = sigma_n^3 (D/N) kappa^3(X/D).
struct SparseGraphScheme {
    double sigma2_n;
    double L_n;
    double t_n; // (N/D)^{1/3} sigma_n^2
};
SparseGraphScheme sparse_graph_scheme(double N_n, double D_n, double kappa2_X, double kappa3_X);

// the CumulantModel equivalent (alpha = N/D, beta = D)
struct CumulantModelParams {
    double alpha_n, beta_n, sigma2, L;
};
CumulantModelParams sparse_scheme_cumulant_model(double N_n, double D_n, double kappa2_X,
                                                 double kappa3_X);

} // namespace modphi

#endif
