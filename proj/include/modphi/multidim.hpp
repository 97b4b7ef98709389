#ifndef MODPHI_MULTIDIM_HPP
#define MODPHI_MULTIDIM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "modphi/deviation.hpp"

namespace modphi {

// Sector of the A-sphere of radius b. For d = 2 the angular interval lives in
// the isotropic coordinates u = A x; for d >= 3 supply an indicator on the
// unit sphere. d = 1 means the two-point "sphere" {-b, +b} with counting
// measure, selected via the indicator.
struct ConicSector {
    int dimension = 2;
    double b = 1.0;
    double theta1 = 0.0, theta2 = kTwoPi;            // d = 2
    std::function<bool(const std::vector<double>&)> on_sphere; // d = 1 or d >= 3
};

// d-dimensional mod-Gaussian data: scaling A_n = sqrt(t_n) A with A symmetric
// positive definite, and the limiting function psi on R^d.
struct MultiModGaussianModel {
    int dimension = 2;
    std::vector<double> A; // row-major d x d, symmetric positive definite
    double t_n = 1.0;
    std::function<double(const std::vector<double>&)> psi; // psi(0) = 1
};

// P[X_n in (A_n)^2 S+] ~ (t_n/2pi)^{d/2} e^{-t_n b^2/2} int_S psi / (t_n b).
// The surface integral uses adaptive refinement until the relative change
// drops below 1e-6.
DeviationEstimate conic_probability(const MultiModGaussianModel& model, const ConicSector& sector);

// exposed for the additivity tests: the surface integral alone
double conic_surface_integral(const MultiModGaussianModel& model, const ConicSector& sector);

// F(r, theta) = exp(-r^4 sin^2(2 theta)/96) normalized over [0, 2pi)
double walk2d_angle_density(double r, double theta);

// Limiting function of the simple walk built from its fourth cumulants:
// d = 2 gives exp(-((z1^4 + z2^4 + 6 (z1 z2)^2)/96).
double dwalk_kurtosis_psi(int d, const std::vector<double>& z);

struct WalkHistogram {
    std::vector<std::int64_t> counts; // theta bins over [0, 2pi)
    std::int64_t accepted = 0;
    std::int64_t trials = 0;
    double acceptance_rate() const { return trials ? (double)accepted / (double)trials : 0.0; }
};

// Empirical conditional distribution of the end-point angle of the simple
// 2-D walk given ||S_n|| >= r n^{3/4}, by rejection sampling. Deterministic in
// (seed, trials) regardless of thread count.
WalkHistogram walk2d_conditional_mc(int n_steps, double r, std::int64_t trials,
                                    std::uint64_t seed, int bins, bool parallel = true,
                                    std::int64_t budget = 10'000'000'000LL);

// integral of walk2d_angle_density over each of `bins` equal bins
std::vector<double> walk2d_density_bins(double r, int bins);

} // namespace modphi

#endif
