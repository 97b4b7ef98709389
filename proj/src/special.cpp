#include "modphi/special.hpp"

#include <cmath>

#include "modphi/errors.hpp"

namespace modphi {

namespace {

// Lanczos g = 7, n = 9 coefficient set
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> log_gamma_core(std::complex<double> z) {
    // valid for Re z > 0.5; caller handles reflection
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + std::complex<double>(i, 0));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
            throw domain_error("log_gamma at a non-positive integer pole");
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_core(1.0 - z);
    }
    return log_gamma_core(z);
}

double log_gamma_real(double x) {
    if (x <= 0) throw domain_error("log_gamma_real requires x > 0");
    return std::lgamma(x);
}

double digamma(double x) {
    if (x <= 0) throw domain_error("digamma requires x > 0");
    double r = 0.0;
    while (x < 12.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series in 1/x^2
    double inv = 1.0 / x, inv2 = inv * inv;
    return r + std::log(x) - 0.5 * inv -
           inv2 * (1.0 / 12 -
                   inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
}

double gaussian_tail(double a) {
    if (a < 26.0) return 0.5 * std::erfc(a * 0.70710678118654752440);
    // erfc underflows around here; hand back the series value (subnormal/zero)
    return std::exp(log_gaussian_tail(a));
}

double log_gaussian_tail(double a) {
    if (a < 8.0) {
        double t = 0.5 * std::erfc(a * 0.70710678118654752440);
        return std::log(t);
    }
    // log[ phi(a)/a * (1 - 1/a^2 + 3/a^4 - 15/a^6 + 105/a^8 - 945/a^10) ]
    double ia2 = 1.0 / (a * a);
    double series = 1 + ia2 * (-1 + ia2 * (3 + ia2 * (-15 + ia2 * (105 - 945 * ia2))));
    return -0.5 * a * a - std::log(a) - 0.5 * std::log(kTwoPi) + std::log(series);
}

namespace {

double gamma_p_series(double a, double x) {
    double sum = 1.0 / a, term = sum;
    for (int n = 1; n < 10000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    // Lentz continued fraction for Q(a,x)
    const double tiny = 1e-300;
    double b = x + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < 1e-17) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_p(double a, double x) {
    if (a <= 0 || x < 0) throw domain_error("gamma_p requires a > 0, x >= 0");
    if (x == 0) return 0;
    if (x < a + 1) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0 || x < 0) throw domain_error("gamma_q requires a > 0, x >= 0");
    if (x == 0) return 1;
    if (x < a + 1) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double barnes_log_g(double x) {
    if (x <= 0) throw domain_error("barnes_log_g requires x > 0");
    // shift x into [12, inf) through log G(x+1) = log Gamma(x) + log G(x)
    double shift = 0.0;
    double y = x;
    while (y < 12.0) {
        shift += std::lgamma(y);
        y += 1.0;
    }
    // expansion of log G(1+z) at z = y-1
    double z = y - 1.0;
    double z2 = z * z;
    double lg = 0.5 * z2 * std::log(z) - 0.75 * z2 + 0.5 * z * std::log(kTwoPi) -
                std::log(z) / 12.0 + kZetaPrimeMinus1;
    // + sum B_{2n+2} / (4 n (n+1) z^{2n})
    double iz2 = 1.0 / z2;
    double corr = iz2 * (-1.0 / 240 +
                         iz2 * (1.0 / 1008 +
                                iz2 * (-1.0 / 1440 +
                                       iz2 * (1.0 / 1056 - iz2 * 691.0 / 327600))));
    return lg + corr - shift;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t j = (std::uint64_t)i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    return primes;
}

WeierstrassValue weierstrass_product(double x, IndexSet set, std::uint32_t K) {
    if (K < 1) throw domain_error("weierstrass_product requires K >= 1");
    double log_prod = 0.0;
    if (set == IndexSet::integers) {
        if (x <= -1.0) throw domain_error("weierstrass_product over integers requires x > -1");
        for (std::uint32_t a = 1; a <= K; ++a) log_prod += std::log1p(x / a) - x / a;
    } else {
        if (x <= -2.0) throw domain_error("weierstrass_product over primes requires x > -2");
        for (std::uint32_t p : primes_up_to(K)) log_prod += std::log1p(x / p) - x / p;
    }
    // |log(1+x/a) - x/a| <= x^2/a^2 for |x/a| <= 1/2, so the dropped log-terms
    // are bounded by x^2 * sum_{a > K} a^{-2} (and the prime sum is smaller).
    double tail = x * x / (double)K;
    return {std::exp(log_prod), tail};
}

} // namespace modphi
