#ifndef MODPHI_MODELS_HPP
#define MODPHI_MODELS_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "modphi/bignat.hpp"
#include "modphi/deviation.hpp"
#include "modphi/series.hpp"

namespace modphi {

// Law on an integer range [offset, offset + masses.size()), possibly with a
// lattice step != 1 (Ising magnetization has step 2).
struct ExactDistribution {
    long long offset = 0;
    long long step = 1;
    std::vector<double> masses;

    double mass_at_index(size_t i) const { return masses[i]; }
    long long value_at_index(size_t i) const { return offset + (long long)i * step; }
    double mean() const;
    double variance() const;
    double third_central_moment() const;
    double tail_geq(double threshold) const; // P[X >= threshold]
    double point(long long value) const;
    double mgf(double z) const;     // sum mass e^{z value} (log-sum-exp inside)
    double log_mgf(double z) const;
    double total() const;
};

// --- cycle counts of uniform random permutations ------------------------------

// Exact law of the cycle count via the independent Bernoulli(1/i) convolution.
ExactDistribution cycles_exact(long long n);

// E[e^{z X_n}] = prod_{i=1}^n (1 + (e^z - 1)/i), evaluated stably in log form.
std::complex<double> cycles_mgf(long long n, std::complex<double> z);

// Exact integer-mode moment identities at scale n!: returns true when the
// convolution's first two moments equal sum n!/i and the matching variance
// identity exactly (BigNat arithmetic, usable to n = 500 and beyond).
bool cycles_exact_moments_check(int n);

// unsigned Stirling numbers of the first kind, row n (n <= 33 fits __int128)
std::vector<__int128> stirling_first_row(int n);

// --- Bahadur-Rao for i.i.d. sums ----------------------------------------------

enum class IidLaw { bernoulli_half, bernoulli, exponential };

struct BahadurRaoResult {
    double estimate_point, exact_point; // point mass (lattice laws only, else 0)
    double estimate_tail, exact_tail;
    double ratio_point, ratio_tail;
};

BahadurRaoResult bahadur_rao_check(long long n, double x, IidLaw law, double q = 0.5);

// --- Poisson approximation of Bernoulli sums ----------------------------------

struct PoissonBernoulli {
    ExactDistribution law;
    double t_n; // sum p_k
    LimitingFunction psi;
    bool degenerate; // t_n too small for a deviation estimate to mean anything
};
PoissonBernoulli poisson_bernoulli(const std::vector<double>& p);

// --- 1-D Ising ring -------------------------------------------------------------

// E[e^{z M_n}] from the transfer-matrix eigenvalues cosh z +- sqrt(sinh^2 z + e^{-2 beta})
double ising_log_mgf(long long n, double beta, double z);
// Exact law of the magnetization via the O(n^2) DP (ring closed by
// conditioning on the first spin). n <= 4000.
ExactDistribution ising_exact(long long n, double beta);

// --- zeros of a random analytic function ---------------------------------------

// log E[e^{z N^h / h^{1/3}}] summed until r^{2k} < 1e-18, with r^2 = h/(h+4pi)
double hyperbolic_zeros_cgf(double h, double z);
double hyperbolic_zeros_mean(double h);     // h / 4pi
double hyperbolic_zeros_variance(double h); // exact geometric sums
long long sample_hyperbolic_zeros(double h, std::uint64_t seed, std::uint64_t stream = 0);

// --- weighted permutation measures ----------------------------------------------

// theta_m >= 0 as a finite table followed by a constant value.
struct ThetaSpec {
    std::vector<double> table;
    double constant = 1.0;

    double at(int m) const { return m <= (int)table.size() ? table[m - 1] : constant; }
};

struct WeightedPerm {
    std::vector<double> h;  // h_0 .. h_nmax (partition function)
    double theta;           // limit value of theta_m
    double K;               // sum_m (theta_m - theta)/m over the table
    // E_Theta[e^{w X_n}] = [t^n] exp(e^w g_Theta) / h_n
    std::function<double(int, double)> mgf;
    // psi_n(w) = mgf(n, w) * exp(-(e^w - 1)(K + theta log n))
    std::function<double(int, double)> psi_n;
};

WeightedPerm weighted_perm(const ThetaSpec& theta, int n_max);

// --- distinct prime divisor counts ----------------------------------------------

struct OmegaStatistics {
    std::uint64_t N;
    std::vector<std::uint64_t> histogram; // histogram[j] = #{k <= N : omega(k) = j}
    double empirical_mgf(double z) const;
    double empirical_mean() const;
    std::uint64_t tail_count(int m) const; // #{k <= N : omega(k) >= m}
};

// omega(k) for k <= N by additive sieve; checkpoints must be increasing, the
// result holds one OmegaStatistics per checkpoint. N <= 1e8.
std::vector<OmegaStatistics> omega_statistics(const std::vector<std::uint64_t>& checkpoints,
                                              bool parallel = true);

// the mod-Poisson display: e^{(log log N + gamma)(e^z-1)} Pi_P(e^z-1) Pi_N*(e^z-1)
double omega_display_mgf(std::uint64_t N, double z, std::uint32_t prime_cutoff = 1000000);

} // namespace modphi

#endif
