#ifndef MODPHI_THOMA_HPP
#define MODPHI_THOMA_HPP

#include <map>
#include <vector>

#include "modphi/rational.hpp"

namespace modphi {

// Integer partition as non-increasing positive parts.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
long long partition_dimension(const Partition& lambda); // dim of the irreducible module

// chi^lambda(mu): integer character value by Murnaghan-Nakayama border-strip
// recursion, memoized per (lambda, remaining cycle suffix).
long long character_value(const Partition& lambda, const Partition& mu);

// z_mu = prod i^{m_i} m_i!
long long cycle_type_size(const Partition& mu);

// Thoma simplex point: alpha, beta non-increasing nonnegative with
// sum alpha + sum beta <= 1; gamma is the defect.
template <class Scalar>
struct ThomaParameterT {
    std::vector<Scalar> alpha;
    std::vector<Scalar> beta;
    Scalar gamma() const {
        Scalar s(1);
        for (const auto& a : alpha) s = s - a;
        for (const auto& b : beta) s = s - b;
        return s;
    }
};

using ThomaParameter = ThomaParameterT<double>;
using ThomaParameterQ = ThomaParameterT<Rational>;

// p_1 = 1 by convention; p_k = sum alpha_i^k + (-1)^{k-1} sum beta_i^k
double power_sum(const ThomaParameter& omega, int k);
Rational power_sum(const ThomaParameterQ& omega, int k);

// tau_omega(sigma) = prod over cycles of p_{|c|}
double tau_omega(const ThomaParameter& omega, const Partition& cycle_type);
Rational tau_omega(const ThomaParameterQ& omega, const Partition& cycle_type);

// Central measure on partitions of n by character inversion:
// P[lambda] = dim(lambda) sum_mu z_mu^{-1} p_mu(omega) chi^lambda(mu). n <= 10.
std::map<Partition, double> central_measure(const ThomaParameter& omega, int n);
std::map<Partition, Rational> central_measure(const ThomaParameterQ& omega, int n);

// Exact cumulants kappa^(1..r) of X = normalized character on a fixed
// permutation of cycle type mu (padded with fixed points to n), under the
// central measure. r <= 3, n <= 10.
std::vector<double> char_cumulants_exact(const ThomaParameter& omega, const Partition& mu, int n,
                                         int r);
std::vector<Rational> char_cumulants_exact(const ThomaParameterQ& omega, const Partition& mu,
                                           int n, int r);

// sigma^2 = k^2 (p_{2k-1} - p_k^2);
// L = k^3 ((3k-2) p_{3k-2} - (6k-3) p_{2k-1} p_k + (3k-1) p_k^3)
struct CharLimits {
    double sigma2;
    double L;
    bool degenerate; // sigma^2 below 1e-14
};
CharLimits sigma2_L_char(const ThomaParameter& omega, int k);

// General-mu limits of n kappa^2 and n^2 kappa^3 through the part-join sums.
CharLimits general_mu_limits(const ThomaParameter& omega, const Partition& mu);

} // namespace modphi

#endif
