#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "modphi/errors.hpp"
#include "modphi/models.hpp"
#include "modphi/special.hpp"

using namespace modphi;

TEST_CASE("cycle count law at tiny n") {
    auto d1 = cycles_exact(1);
    CHECK(d1.point(1) == doctest::Approx(1.0));
    auto d3 = cycles_exact(3);
    CHECK(d3.point(1) == doctest::Approx(2.0 / 6).epsilon(1e-14));
    CHECK(d3.point(2) == doctest::Approx(3.0 / 6).epsilon(1e-14));
    CHECK(d3.point(3) == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("cycle counts: mean and variance against harmonic sums") {
    for (long long n : {10LL, 100LL, 500LL}) {
        auto d = cycles_exact(n);
        CHECK(std::fabs(d.total() - 1.0) < 1e-12);
        double H = 0, H2 = 0;
        for (long long i = 1; i <= n; ++i) {
            H += 1.0 / i;
            H2 += 1.0 / ((double)i * i);
        }
        CHECK(d.mean() == doctest::Approx(H).epsilon(1e-11));
        CHECK(d.variance() == doctest::Approx(H - H2).epsilon(1e-9));
    }
}

TEST_CASE("cycle convolution in exact integer mode") {
    // moment identities at denominator n!, exact via big integers
    CHECK(cycles_exact_moments_check(40));
    CHECK(cycles_exact_moments_check(500));
}

TEST_CASE("stirling numbers match the exact convolution") {
    auto row = stirling_first_row(5);
    CHECK((long long)row[1] == 24);
    CHECK((long long)row[2] == 50);
    CHECK((long long)row[3] == 35);
    CHECK((long long)row[4] == 10);
    CHECK((long long)row[5] == 1);
    auto d = cycles_exact(5);
    for (int k = 1; k <= 5; ++k)
        CHECK(d.point(k) == doctest::Approx((double)(long long)row[k] / 120.0).epsilon(1e-12));
}

TEST_CASE("cycles mgf") {
    CHECK(std::abs(cycles_mgf(50, {0, 0}) - 1.0) < 1e-14);
    // derivative at 0 is the harmonic number
    double H = 0;
    for (int i = 1; i <= 50; ++i) H += 1.0 / i;
    double fd = (cycles_mgf(50, {1e-6, 0}).real() - cycles_mgf(50, {-1e-6, 0}).real()) / 2e-6;
    CHECK(fd == doctest::Approx(H).epsilon(1e-8));
    // mgf of the exact law matches the closed product
    auto d = cycles_exact(200);
    for (double z : {-0.5, 0.4, 1.0})
        CHECK(d.mgf(z) == doctest::Approx(cycles_mgf(200, {z, 0}).real()).epsilon(1e-9));
}

TEST_CASE("mod-poisson residual of cycle counts approaches 1/Gamma(e^z)") {
    double z = 0.5;
    double target = std::exp(-log_gamma(std::exp(std::complex<double>(z, 0))).real());
    double prev = 1e9;
    for (long long n : {1000LL, 10000LL, 100000LL}) {
        double psi_n = cycles_mgf(n, {z, 0}).real() *
                       std::exp(-(std::exp(z) - 1.0) * std::log((double)n));
        double err = std::fabs(psi_n - target);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("bahadur-rao for fair bernoulli sums") {
    auto r = bahadur_rao_check(1000, 0.75, IidLaw::bernoulli_half);
    CHECK(std::fabs(r.ratio_point - 1.0) < 0.01);
    CHECK(std::fabs(r.ratio_tail - 1.0) < 0.03);
    CHECK_THROWS_AS(bahadur_rao_check(1000, 0.5, IidLaw::bernoulli_half), out_of_range_error);
}

TEST_CASE("bahadur-rao for exponential sums") {
    auto r = bahadur_rao_check(500, 2.0, IidLaw::exponential);
    CHECK(std::fabs(r.ratio_tail - 1.0) < 0.02);
}

TEST_CASE("poisson-bernoulli convolution") {
    auto pb0 = poisson_bernoulli({0.0, 0.0, 0.0});
    CHECK(pb0.law.point(0) == doctest::Approx(1.0));
    CHECK(std::abs(pb0.psi({0.3, 0}) - 1.0) < 1e-12);

    std::vector<double> p;
    for (int k = 2; k <= 60; ++k) p.push_back(1.0 / ((double)k * k));
    auto pb = poisson_bernoulli(p);
    CHECK(std::fabs(pb.law.total() - 1.0) < 1e-12);
    // law mgf equals the closed product
    for (double z : {-0.7, 0.5, 1.1}) {
        double closed = 0;
        for (double pk : p) closed += std::log1p(pk * std::expm1(z));
        CHECK(pb.law.log_mgf(z) == doctest::Approx(closed).epsilon(1e-9));
    }
    CHECK(pb.degenerate); // t_n = sum p_k ~ 1.6, far from asymptopia
    CHECK(std::isfinite(pb.psi({0.5, 0}).real()));

    auto single = poisson_bernoulli({0.3});
    CHECK(single.degenerate);
    CHECK(single.law.point(1) == doctest::Approx(0.3));
}

TEST_CASE("poisson-bernoulli deviation estimate vs exact convolution") {
    // P[X >= (1+eps) t_n] through the lattice tail with the truncated-product
    // residual, against the exact DP law; the relative error is a finite-size
    // correction and shrinks as t_n grows within the same family
    double prev_err = 1e9;
    for (int K : {2000, 50000}) {
        std::vector<double> p;
        for (int k = 1; k <= K; ++k) p.push_back(std::min(0.5, std::pow((double)k, -0.6)));
        auto pb = poisson_bernoulli(p);
        CHECK_FALSE(pb.degenerate);
        ModPhiModel model{poisson_law(1.0), pb.t_n, pb.psi, {}, {}};
        long long threshold = (long long)std::llround(1.5 * pb.t_n);
        double x = (double)threshold / pb.t_n;
        double est = lattice_tail(model, x).prob();
        double exact = pb.law.tail_geq((double)threshold);
        double err = std::fabs(est / exact - 1.0);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 0.05);
}

TEST_CASE("ising: exhaustive check at n = 4") {
    double beta = 1.0;
    auto d = ising_exact(4, beta);
    // enumerate the 16 configurations directly
    std::map<long long, double> direct;
    double z = 0;
    for (int cfg = 0; cfg < 16; ++cfg) {
        int dis = 0, mag = 0;
        for (int i = 0; i < 4; ++i) {
            int s = cfg >> i & 1, t = cfg >> ((i + 1) % 4) & 1;
            if (s != t) ++dis;
            mag += s ? 1 : -1;
        }
        double w = std::exp(-beta * dis);
        direct[mag] += w;
        z += w;
    }
    for (auto [m, w] : direct) CHECK(d.point(m) == doctest::Approx(w / z).epsilon(1e-12));
}

TEST_CASE("ising: dp mgf equals the eigenvalue closed form") {
    for (long long n : {50LL, 400LL, 2000LL}) {
        auto d = ising_exact(n, 0.5);
        for (double z : {-0.2, 0.01, 0.1}) {
            double lhs = d.log_mgf(z);
            double rhs = ising_log_mgf(n, 0.5, z);
            CHECK(std::fabs(lhs - rhs) < 1e-10 * std::max(1.0, std::fabs(rhs)));
        }
    }
}

TEST_CASE("ising: free spins at beta = 0 and the quartic coefficient") {
    auto d = ising_exact(10, 0.0);
    for (int k = 0; k <= 10; ++k) {
        double binom = std::exp(std::lgamma(11.0) - std::lgamma(k + 1.0) - std::lgamma(11.0 - k));
        CHECK(d.point(10 - 2 * k) == doctest::Approx(binom / 1024.0).epsilon(1e-12));
    }
    // log E[e^{z M_n / n^{1/4}}] - sqrt(n) e^beta z^2/2 -> -(3 e^{3b} - e^b) z^4/24
    double n = 4000, z = 1.0;
    for (double beta : {0.0, 0.5}) {
        double lhs = ising_log_mgf((long long)n, beta, z / std::pow(n, 0.25)) -
                     std::sqrt(n) * std::exp(beta) * z * z / 2;
        double target = -(3 * std::exp(3 * beta) - std::exp(beta)) * z * z * z * z / 24.0;
        CHECK(std::fabs(lhs - target) < 20.0 / std::sqrt(n));
    }
}

TEST_CASE("hyperbolic zeros cgf") {
    CHECK(hyperbolic_zeros_cgf(100.0, 0.0) == doctest::Approx(0.0));
    double h = 1e4;
    CHECK(hyperbolic_zeros_mean(h) == doctest::Approx(h / (4 * kPi)).epsilon(1e-12));
    // exact variance equals the direct sum
    double r2 = h / (h + 4 * kPi), q = r2, var = 0;
    while (q > 1e-18) {
        var += q * (1 - q);
        q *= r2;
    }
    CHECK(hyperbolic_zeros_variance(h) == doctest::Approx(var).epsilon(1e-10));

    // cubic coefficient via the odd part (kills all even cumulants); exact
    // mean term subtracted
    double z = 1.0;
    double hc = std::cbrt(h);
    double modd = hyperbolic_zeros_mean(h) / hc * z; // mean term of the rescaled cgf
    double odd =
        0.5 * (hyperbolic_zeros_cgf(h, z) - hyperbolic_zeros_cgf(h, -z)) - modd;
    CHECK(std::fabs(odd / (z * z * z) - 1.0 / (144 * kPi)) < 0.02 / (144 * kPi));
}

TEST_CASE("hyperbolic zeros sampler hits the mean") {
    double h = 2500.0;
    long long n = 20000;
    double s = 0, s2 = 0;
    for (long long i = 0; i < n; ++i) {
        double x = (double)sample_hyperbolic_zeros(h, 99, (std::uint64_t)i);
        s += x;
        s2 += x * x;
    }
    double mean = s / n;
    double sd = std::sqrt((s2 / n - mean * mean) / n);
    CHECK(std::fabs(mean - h / (4 * kPi)) < 4 * sd);
}

TEST_CASE("weighted permutations: uniform and ewens") {
    ThetaSpec uniform{{}, 1.0};
    auto wp1 = weighted_perm(uniform, 220);
    for (int n : {1, 7, 100, 220}) CHECK(wp1.h[n] == doctest::Approx(1.0).epsilon(1e-12));
    // theta = 1 reproduces the uniform cycle-count mgf
    for (int n : {5, 60, 200}) {
        for (double w : {-0.4, 0.3, 0.8}) {
            double lhs = wp1.mgf(n, w);
            double rhs = cycles_mgf(n, {w, 0}).real();
            CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::fabs(rhs));
        }
    }

    ThetaSpec ewens2{{}, 2.0};
    auto wp2 = weighted_perm(ewens2, 2000);
    CHECK(wp2.K == doctest::Approx(0.0));
    for (int n : {10, 500, 2000}) CHECK(wp2.h[n] == doctest::Approx((double)n + 1).epsilon(1e-9));
    // h_n / (e^K n^{theta-1} / Gamma(theta)) -> 1
    double ratio = wp2.h[2000] / (std::pow(2000.0, 1.0) / std::tgamma(2.0));
    CHECK(std::fabs(ratio - 1.0) < 0.01);
}

TEST_CASE("weighted permutations: residual against the gamma ratio") {
    ThetaSpec ewens2{{}, 2.0};
    auto wp = weighted_perm(ewens2, 2000);
    for (double w : {-0.5, 0.0, 0.3, 0.5}) {
        double target = std::exp(std::lgamma(2.0) - std::lgamma(2.0 * std::exp(w)));
        CHECK(std::fabs(wp.psi_n(2000, w) / target - 1.0) < 0.02);
    }
    // a finite table before the constant shifts K
    ThetaSpec mixed{{0.5, 3.0}, 1.5};
    auto wpm = weighted_perm(mixed, 50);
    CHECK(wpm.K == doctest::Approx((0.5 - 1.5) / 1 + (3.0 - 1.5) / 2));
    CHECK(wpm.h[1] == doctest::Approx(0.5)); // h_1 = theta_1
    CHECK_THROWS_AS(weighted_perm(ThetaSpec{{-1.0}, 1.0}, 10), validation_error);
}

TEST_CASE("omega sieve small values") {
    auto stats = omega_statistics({30});
    const auto& s = stats[0];
    // omega over [1,30]: 1 has none; primes and prime powers have 1;
    // 6,10,12,14,15,18,20,21,22,24,26,28 have 2; 30 has 3
    CHECK(s.histogram[0] == 1);
    CHECK(s.histogram[1] == 16);
    CHECK(s.histogram[2] == 12);
    CHECK(s.histogram[3] == 1);
    CHECK(s.tail_count(2) == 13);
}

TEST_CASE("omega mean drifts like log log N") {
    auto stats = omega_statistics({100000, 1000000});
    CHECK(stats[0].empirical_mean() < stats[1].empirical_mean());
    // Mertens-type constant keeps the mean within O(1) of log log N
    for (const auto& s : stats)
        CHECK(std::fabs(s.empirical_mean() - std::log(std::log((double)s.N))) < 0.5);
}
