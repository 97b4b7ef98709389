#ifndef MODPHI_DEVIATION_HPP
#define MODPHI_DEVIATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modphi/limiting.hpp"
#include "modphi/reference_law.hpp"

namespace modphi {

// One evaluation index of a mod-phi convergent sequence: the reference law,
// the parameter t_n at that index, and the limiting function psi.
struct ModPhiModel {
    ReferenceLaw law;
    double t_n;
    LimitingFunction psi = LimitingFunction::one();
    // optional closed-form psi', psi'' at real points; finite differences otherwise
    std::function<double(double)> psi_d1, psi_d2;

    double psi_real(double h) const { return psi.real(h); }
    double psi_deriv1(double h) const { return psi_d1 ? psi_d1(h) : psi.d1(h); }
    double psi_deriv2(double h) const { return psi_d2 ? psi_d2(h) : psi.d2(h); }
};

enum class Regime {
    lattice_point,
    lattice_tail,
    nonlattice_tail,
    clt,
    crossover,
    cumulant_moderate,
};

std::string regime_name(Regime r);

// A probability approximation split as
//   log_prob = -exponent_rate + log(leading * correction).
struct DeviationEstimate {
    Regime regime;
    double log_prob;
    double leading;          // > 0
    double correction;       // multiplicative, 1 when absent
    double exponent_rate;    // t_n * F(x) (or the analogous quadratic rate)
    bool boundary_flag = false; // set when the evaluation sits at a regime boundary

    double prob() const;
};

// P[X_n = t_n x] for a span-1 lattice model; t_n x must be an integer (checked
// to 1e-9). order = 1 adds the a_1/t_n correction with
//   a_1 = -psi''/2 eta'' + (psi eta'''' + 4 psi' eta''')/24 eta''^2
//         - 15 psi (eta''')^2 / 72 eta''^3,  all at h.
DeviationEstimate lattice_point_mass(const ModPhiModel& model, double x, int order = 0);

// P[X_n >= t_n x] for lattice models, x in the image of eta' on (0, c);
// the extra factor over the point mass is 1/(1 - e^{-h}).
DeviationEstimate lattice_tail(const ModPhiModel& model, double x);

// P[X_n >= t_n x] for non-lattice models, x in (eta'(0), eta'(c)); the lower
// tail P[X_n <= t_n x] for x < eta'(0) comes from the same formula with |h|.
DeviationEstimate nonlattice_tail(const ModPhiModel& model, double x);

// P[X_n >= t_n eta'(0) + sqrt(t_n eta''(0)) y], uniformly valid from the CLT
// regime into the deviation regime:
//   exp(-t_n F(eta'(0)+s)) * exp(beta^2/2) * P[N(0,1) >= beta],
// with s = y sqrt(eta''(0)/t_n) and beta = h sqrt(t_n eta''(h)).
DeviationEstimate crossover_tail(const ModPhiModel& model, double y);

// Normalization data for the cumulant method: |kappa^(r)(S_n)| <= (Cr)^r
// alpha_n beta_n^r with kappa^(2) ~ sigma^2 alpha_n beta_n^2 and
// kappa^(3) ~ L alpha_n beta_n^3.
struct CumulantModel {
    double alpha_n;
    double beta_n;
    double sigma2;
    double L;
};

// P[S_n/(beta_n sigma) >= T] =
//   e^{-T^2/2 alpha} / sqrt(2 pi T^2/alpha) * exp(L T^3 / (6 sigma^3 alpha^2)).
// lower_tail evaluates the symmetric estimate with L -> -L.
DeviationEstimate cumulant_moderate(const CumulantModel& model, double T,
                                    bool lower_tail = false);

// Petrov-Cramer coefficients lambda^(2..v), hard-coded for v <= 4 and
// cross-checked against the b-coefficient recursion. kappas supplies
// kappa^(2..v) in order.
std::vector<double> petrov_coefficients(const std::vector<double>& kappas, int v);

// Corrected Gaussian CDF G_n(x): Phi(x) - psi'(0) g(x)/sqrt(t_n eta''(0))
//   + eta'''(0) (1 - x^2) g(x) / (6 sqrt(t_n eta''(0)^3)).
double berry_esseen_cdf(const ModPhiModel& model, double x);

// Closed interval, endpoints may be infinite.
struct Interval {
    double lo;
    double hi;
};

struct BorelBound {
    double rate;                  // F(B)
    std::vector<double> attained; // B_min, one or two points
    double constant;              // sum over B_min of the prefactor; +inf at eta'(0)
    double log_prob_bound;        // log of e^{-t_n F(B)} constant / sqrt(2 pi t_n)
    bool lower_bound_tight;       // some [b, b+delta) subset of B at the minimizers
};

// Upper bound for P[X_n in t_n B] over a finite union of closed intervals.
BorelBound borel_bound(const ModPhiModel& model, const std::vector<Interval>& B);

} // namespace modphi

#endif
