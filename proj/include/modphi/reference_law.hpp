#ifndef MODPHI_REFERENCE_LAW_HPP
#define MODPHI_REFERENCE_LAW_HPP

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace modphi {

// Infinitely divisible reference law represented by its cumulant generating
// function eta, convergent on the strip |Re z| < strip_halfwidth. eta(0) = 0
// and eta''(h) > 0 on the real segment (non-degenerate law).
struct ReferenceLaw {
    std::string name;
    std::function<std::complex<double>(std::complex<double>)> eta;
    // eta', eta'', eta''', eta'''' at real argument; defaulted to central
    // finite differences when a custom law supplies only eta.
    std::function<double(double)> eta_d1, eta_d2, eta_d3, eta_d4;
    double strip_halfwidth = std::numeric_limits<double>::infinity();
    bool lattice = false;
    double lattice_span = 1.0;

    double eta_real(double h) const { return eta(std::complex<double>(h, 0)).real(); }
};

ReferenceLaw gaussian_law(double mean, double variance);
ReferenceLaw poisson_law(double lambda);
// Bernoulli(q) reference: not infinitely divisible, but the lattice tail
// machinery applies to i.i.d. sums against it (two consecutive支持 points).
ReferenceLaw bernoulli_law(double q);
// Exponential(1) reference, eta(z) = -log(1-z) on the strip |Re z| < 1.
ReferenceLaw exponential_law();

// Custom law from eta alone; derivatives by 4th-order central differences with
// step 1e-4 * (1 + |h|).
ReferenceLaw custom_law(std::function<std::complex<double>(std::complex<double>)> eta,
                        double strip_halfwidth, bool lattice, double lattice_span = 1.0);

// eta as a sum of terms c * z^a * e^(b z); the CLI custom-spec file format.
struct EtaTerm {
    double coeff;
    int zpow;
    double expmult;
};
ReferenceLaw law_from_terms(const std::vector<EtaTerm>& terms, double strip_halfwidth,
                            bool lattice, double lattice_span = 1.0);

// Legendre-Fenchel data at one point: F(x) = x h - eta(h) with eta'(h) = x,
// F' = h, F'' = 1/eta''(h).
struct LegendrePoint {
    double x;
    double h;
    double F;
    double Fp;
    double Fpp;
};

// Solve eta'(h) = x by safeguarded Newton (bisection fallback) on the strictly
// increasing map h -> eta'(h); |eta'(h) - x| <= 1e-12 * max(1, |x|).
LegendrePoint solve_saddle(const ReferenceLaw& law, double x);

std::vector<LegendrePoint> legendre_grid(const ReferenceLaw& law, const std::vector<double>& xs);

} // namespace modphi

#endif
