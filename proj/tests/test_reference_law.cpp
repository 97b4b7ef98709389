#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "modphi/errors.hpp"
#include "modphi/reference_law.hpp"
#include "modphi/rng.hpp"

using namespace modphi;

TEST_CASE("gaussian closed forms") {
    auto law = gaussian_law(0, 1);
    auto lp = solve_saddle(law, 2.0);
    CHECK(lp.h == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lp.F == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lp.Fpp == doctest::Approx(1.0).epsilon(1e-12));

    // F_{N(m, s2)}(x) = (x-m)^2 / (2 s2)
    auto law2 = gaussian_law(0.7, 2.3);
    for (double x : {-1.0, 0.0, 0.7, 2.4}) {
        auto p = solve_saddle(law2, x);
        CHECK(p.F == doctest::Approx((x - 0.7) * (x - 0.7) / (2 * 2.3)).epsilon(1e-11));
    }
}

TEST_CASE("poisson closed forms") {
    auto law = poisson_law(1);
    auto at_mean = solve_saddle(law, 1.0);
    CHECK(std::fabs(at_mean.h) < 1e-12);
    CHECK(std::fabs(at_mean.F) < 1e-12);

    auto at_e = solve_saddle(law, std::exp(1.0));
    CHECK(at_e.h == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at_e.F == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("legendre grid examples") {
    auto g = legendre_grid(gaussian_law(0, 1), {-1.0, 0.0, 1.0});
    CHECK(g[0].F == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::fabs(g[1].F) < 1e-12);
    CHECK(g[2].F == doctest::Approx(0.5).epsilon(1e-12));

    auto p1 = legendre_grid(poisson_law(1), {0.5});
    CHECK(p1[0].F == doctest::Approx(0.5 * std::log(0.5) + 0.5).epsilon(1e-12));

    auto p2 = legendre_grid(poisson_law(2), {2.0});
    CHECK(std::fabs(p2[0].F) < 1e-12);
}

TEST_CASE("involution and curvature identities") {
    auto laws = {gaussian_law(0.3, 2.0), poisson_law(1.7)};
    for (const auto& law : laws) {
        CounterRng rng(7, 1);
        for (int i = 0; i < 200; ++i) {
            double x = law.name == "poisson" ? 0.2 + 5 * rng.next_double()
                                             : -4 + 8 * rng.next_double();
            auto lp = solve_saddle(law, x);
            CHECK(std::fabs(law.eta_d1(lp.Fp) - x) <= 1e-10 * std::max(1.0, std::fabs(x)));
            CHECK(std::fabs(lp.Fpp * law.eta_d2(lp.h) - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("F is convex on a grid") {
    auto law = poisson_law(1.0);
    std::vector<double> F;
    double step = 0.05;
    for (double x = 0.2; x <= 4.0; x += step) F.push_back(solve_saddle(law, x).F);
    for (size_t i = 1; i + 1 < F.size(); ++i)
        CHECK(F[i + 1] - 2 * F[i] + F[i - 1] >= -1e-9);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(solve_saddle(poisson_law(1), -0.5), out_of_range_error);
    // exponential law: eta' maps (-inf, 1) onto (0, inf); x <= 0 unreachable
    CHECK_THROWS_AS(solve_saddle(exponential_law(), -1.0), out_of_range_error);
    CHECK_THROWS_AS(legendre_grid(poisson_law(1), {1.0, -2.0}), out_of_range_error);
}

TEST_CASE("finite strip stays usable near the boundary") {
    auto law = exponential_law(); // strip half-width 1
    auto lp = solve_saddle(law, 50.0);
    CHECK(lp.h == doctest::Approx(1.0 - 1.0 / 50.0).epsilon(1e-10));
}

TEST_CASE("custom law from eta terms matches the built-in poisson") {
    // eta(z) = 2(e^z - 1)
    std::vector<EtaTerm> terms = {{2.0, 0, 1.0}, {-2.0, 0, 0.0}};
    auto law = law_from_terms(terms, std::numeric_limits<double>::infinity(), true, 1.0);
    auto ref = poisson_law(2.0);
    for (double x : {0.5, 2.0, 3.3}) {
        auto a = solve_saddle(law, x);
        auto b = solve_saddle(ref, x);
        CHECK(a.h == doctest::Approx(b.h).epsilon(1e-10));
        CHECK(a.F == doctest::Approx(b.F).epsilon(1e-10));
    }
    CHECK_THROWS_AS(law_from_terms({{1.0, 0, 1.0}}, 1.0, false), validation_error);
}

TEST_CASE("finite-difference derivatives of a custom law") {
    auto law = custom_law([](std::complex<double> z) { return std::exp(z) - 1.0; },
                          std::numeric_limits<double>::infinity(), true, 1.0);
    for (double h : {0.0, 0.5, 1.5}) {
        CHECK(law.eta_d1(h) == doctest::Approx(std::exp(h)).epsilon(1e-9));
        CHECK(law.eta_d2(h) == doctest::Approx(std::exp(h)).epsilon(1e-7));
        CHECK(law.eta_d3(h) == doctest::Approx(std::exp(h)).epsilon(1e-5));
        CHECK(law.eta_d4(h) == doctest::Approx(std::exp(h)).epsilon(1e-3));
    }
}
