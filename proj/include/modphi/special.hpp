#ifndef MODPHI_SPECIAL_HPP
#define MODPHI_SPECIAL_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace modphi {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 2 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008;
// Mertens constant: sum_{p <= N} 1/p = log log N + M + o(1)
inline constexpr double kMertens = 0.26149721284764278375542683861;
// zeta'(-1) = 1/12 - log A (A = Glaisher-Kinkelin)
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921391966024;

// Lanczos log-gamma, principal branch, ~1e-13 relative on the real axis.
std::complex<double> log_gamma(std::complex<double> z);
double log_gamma_real(double x); // x > 0

double digamma(double x); // x > 0

// P[N(0,1) >= a]; complementary-error based, asymptotic series past the erfc
// underflow point.
double gaussian_tail(double a);
// log P[N(0,1) >= a], valid far into the tail.
double log_gaussian_tail(double a);

// Regularized incomplete gamma: lower P(a,x) and upper Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// log G(x) for the Barnes G-function on x > 0, via the large-argument
// expansion after shifting with G(z+1) = Gamma(z) G(z).
double barnes_log_g(double x);

// primes <= limit by plain sieve
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct WeierstrassValue {
    double value;          // truncated product
    double log_tail_bound; // bound on |log remainder|
};

enum class IndexSet { integers, primes };

// prod_{a in A, a <= K} (1 + x/a) e^{-x/a}
WeierstrassValue weierstrass_product(double x, IndexSet set, std::uint32_t K);

} // namespace modphi

#endif
