#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "modphi/limiting.hpp"
#include "modphi/special.hpp"

using namespace modphi;

TEST_CASE("all kinds satisfy psi(0) = 1") {
    std::vector<LimitingFunction> kinds = {
        LimitingFunction::one(),
        LimitingFunction::exp_monomial(1.0, 3),
        LimitingFunction::inv_gamma_exp(),
        LimitingFunction::gamma_ratio(2.0),
        LimitingFunction::barnes_ratio(1.5),
        LimitingFunction::barnes_cue_real(),
        LimitingFunction::weierstrass(IndexSet::integers, 1000),
    };
    for (const auto& psi : kinds) CHECK(std::abs(psi({0, 0}) - 1.0) < 1e-12);
}

TEST_CASE("exp monomial conjugation symmetry") {
    auto psi = LimitingFunction::exp_monomial(0.7, 3);
    std::complex<double> z(0.4, 1.1);
    CHECK(std::abs(psi(std::conj(z)) - std::conj(psi(z))) < 1e-13);
}

TEST_CASE("gamma ratio plug-ins") {
    auto psi = LimitingFunction::gamma_ratio(2.0);
    CHECK(std::abs(psi({0, 0}) - 1.0) < 1e-12); // Gamma(2)/Gamma(2)
    // at w = log(3/2): Gamma(2)/Gamma(3)
    double w = std::log(1.5);
    CHECK(psi({w, 0}).real() == doctest::Approx(1.0 / 2.0).epsilon(1e-11));
}

TEST_CASE("inv gamma exp on the cycle scale") {
    auto psi = LimitingFunction::inv_gamma_exp();
    // 1/Gamma(e^z) at z = log 2: 1/Gamma(2) = 1
    CHECK(psi({std::log(2.0), 0}).real() == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(psi({std::log(3.0), 0}).real() == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("barnes ratios agree with the functional equation") {
    auto usp = LimitingFunction::barnes_ratio(1.5);
    // G(3/2)/G(5/2) = 1/Gamma(3/2)
    CHECK(usp({1.0, 0}).real() == doctest::Approx(std::exp(-std::lgamma(1.5))).epsilon(1e-9));
    auto cue = LimitingFunction::barnes_cue_real();
    // G(1+x/2)^2/G(1+x) at x = 2: G(2)^2/G(3) = 1
    CHECK(cue({2.0, 0}).real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("derivatives: finite differences vs closed form") {
    double L = 0.8;
    auto psi = LimitingFunction::exp_monomial(L, 3);
    for (double x : {0.0, 0.3, 1.0}) {
        double v = psi.real(x);
        double d1_closed = v * L * x * x / 2.0;
        double d2_closed = v * (L * x + (L * x * x / 2.0) * (L * x * x / 2.0));
        CHECK(psi.d1(x) == doctest::Approx(d1_closed).epsilon(1e-7));
        CHECK(psi.d2(x) == doctest::Approx(d2_closed).epsilon(1e-5));
    }
}
