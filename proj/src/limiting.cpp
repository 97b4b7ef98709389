#include "modphi/limiting.hpp"

#include <cmath>

#include "modphi/errors.hpp"

namespace modphi {

LimitingFunction LimitingFunction::one() {
    return LimitingFunction("one", [](std::complex<double>) { return std::complex<double>(1, 0); });
}

LimitingFunction LimitingFunction::exp_monomial(double L, int v) {
    if (v < 1) throw validation_error("exp_monomial needs v >= 1");
    double fact = 1;
    for (int i = 2; i <= v; ++i) fact *= i;
    return LimitingFunction("exp_monomial", [L, v, fact](std::complex<double> z) {
        std::complex<double> zp = 1.0;
        for (int i = 0; i < v; ++i) zp *= z;
        return std::exp(L * zp / fact);
    });
}

LimitingFunction LimitingFunction::inv_gamma_exp() {
    return LimitingFunction("inv_gamma_exp", [](std::complex<double> z) {
        return std::exp(-log_gamma(std::exp(z)));
    });
}

LimitingFunction LimitingFunction::gamma_ratio(double theta) {
    if (theta <= 0) throw validation_error("gamma_ratio needs theta > 0");
    return LimitingFunction("gamma_ratio", [theta](std::complex<double> w) {
        return std::exp(log_gamma(theta) - log_gamma(theta * std::exp(w)));
    });
}

LimitingFunction LimitingFunction::barnes_ratio(double a) {
    if (a <= 0) throw validation_error("barnes_ratio needs a > 0");
    return LimitingFunction("barnes_ratio", [a](std::complex<double> z) {
        if (std::fabs(z.imag()) > 1e-14)
            throw domain_error("barnes_ratio is implemented on the real axis only");
        double x = z.real();
        if (a + x <= 0) throw domain_error("barnes_ratio argument out of domain");
        return std::complex<double>(std::exp(barnes_log_g(a) - barnes_log_g(a + x)), 0);
    });
}

LimitingFunction LimitingFunction::barnes_cue_real() {
    return LimitingFunction("barnes_cue_real", [](std::complex<double> z) {
        if (std::fabs(z.imag()) > 1e-14)
            throw domain_error("barnes_cue_real is implemented on the real axis only");
        double x = z.real();
        if (1 + x / 2 <= 0 || 1 + x <= 0) throw domain_error("barnes_cue_real argument out of domain");
        return std::complex<double>(
            std::exp(2 * barnes_log_g(1 + x / 2) - barnes_log_g(1 + x)), 0);
    });
}

LimitingFunction LimitingFunction::weierstrass(IndexSet set, std::uint32_t K) {
    return LimitingFunction("weierstrass", [set, K](std::complex<double> z) {
        if (std::fabs(z.imag()) > 1e-14)
            throw domain_error("weierstrass kind is implemented on the real axis only");
        return std::complex<double>(weierstrass_product(z.real(), set, K).value, 0);
    });
}

LimitingFunction LimitingFunction::custom(std::string name, Evaluator f) {
    return LimitingFunction(std::move(name), std::move(f));
}

double LimitingFunction::d1(double x) const {
    if (d1_) return d1_(x);
    double s = 1e-5 * (1.0 + std::fabs(x));
    return (-real(x + 2 * s) + 8 * real(x + s) - 8 * real(x - s) + real(x - 2 * s)) / (12 * s);
}

double LimitingFunction::d2(double x) const {
    if (d2_) return d2_(x);
    double s = 1e-4 * (1.0 + std::fabs(x));
    return (-real(x + 2 * s) + 16 * real(x + s) - 30 * real(x) + 16 * real(x - s) -
            real(x - 2 * s)) /
           (12 * s * s);
}

std::complex<double> eval_psi(const LimitingFunction& psi, std::complex<double> z) {
    return psi(z);
}

} // namespace modphi
