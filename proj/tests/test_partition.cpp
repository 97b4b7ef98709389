#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "modphi/errors.hpp"
#include "modphi/rng.hpp"
#include "modphi/deviation.hpp"
#include "modphi/setpartition.hpp"

using namespace modphi;

namespace {

// brute-force family over independent fair bits: Y_i = f_i(bits); moments by
// exhaustive enumeration, probabilities dyadic
struct BitFamily {
    int n_bits;
    std::vector<std::function<Rational(std::uint64_t)>> vars;

    Rational mixed(const std::vector<int>& idx) const {
        Rational acc(0);
        for (std::uint64_t w = 0; w < (1ull << n_bits); ++w) {
            Rational prod(1);
            for (int i : idx) prod *= vars[i](w);
            acc += prod;
        }
        return acc / Rational(int128(1) << n_bits);
    }
    Rational power(int m) const {
        Rational acc(0);
        for (std::uint64_t w = 0; w < (1ull << n_bits); ++w) {
            Rational x(0);
            for (const auto& f : vars) x += f(w);
            acc += x.pow(m);
        }
        return acc / Rational(int128(1) << n_bits);
    }
};

} // namespace

TEST_CASE("mobius values") {
    SetPartition whole{{{0, 1, 2, 3}}};
    CHECK(mobius(whole) == 1);
    SetPartition singles{{{0}, {1}, {2}}};
    CHECK(mobius(singles) == 2);
    SetPartition pair_single{{{0, 1}, {2}}};
    CHECK(mobius(pair_single) == -1);
}

TEST_CASE("set partition counts are Bell numbers") {
    int bell[] = {1, 2, 5, 15, 52, 203, 877};
    for (int n = 1; n <= 7; ++n) CHECK((int)set_partitions(n).size() == bell[n - 1]);
}

TEST_CASE("joint cumulants of two and three variables") {
    // Y0 = 2B0 - 1 (fair sign), Y1 = Y0, Y2 independent sign
    BitFamily bf;
    bf.n_bits = 2;
    auto sign = [](int bit) {
        return [bit](std::uint64_t w) { return Rational((w >> bit & 1) ? 1 : -1); };
    };
    bf.vars = {sign(0), sign(0), sign(1)};

    DependencyFamily fam;
    fam.N = 3;
    fam.edges = {{0, 1}};
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(1);

    // kappa(X0, X1) = E[X0 X1] - E[X0] E[X1] = 1
    CHECK(joint_cumulant(fam, {0, 1}) == Rational(1));
    // independent pair vanishes
    CHECK(joint_cumulant(fam, {0, 2}) == Rational(0));
    // the five-term three-variable expansion, against a direct evaluation
    Rational k3 = joint_cumulant(fam, {0, 1, 2});
    Rational direct = bf.mixed({0, 1, 2}) - bf.mixed({0, 1}) * bf.mixed({2}) -
                      bf.mixed({0, 2}) * bf.mixed({1}) - bf.mixed({1, 2}) * bf.mixed({0}) +
                      Rational(2) * bf.mixed({0}) * bf.mixed({1}) * bf.mixed({2});
    CHECK(k3 == direct);
}

TEST_CASE("joint cumulants are symmetric and multilinear") {
    BitFamily bf;
    bf.n_bits = 3;
    bf.vars = {
        [](std::uint64_t w) { return Rational((w & 1) + (w >> 1 & 1)); },
        [](std::uint64_t w) { return Rational((w >> 1 & 1) ? 2 : -1); },
        [](std::uint64_t w) { return Rational((w >> 2 & 1)); },
    };
    DependencyFamily fam;
    fam.N = 3;
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(2);

    CHECK(joint_cumulant(fam, {0, 1, 2}) == joint_cumulant(fam, {2, 0, 1}));

    // scale variable 1 by 5/3 through a wrapper family
    BitFamily scaled = bf;
    scaled.vars[1] = [&bf](std::uint64_t w) { return Rational(5, 3) * bf.vars[1](w); };
    DependencyFamily fam2 = fam;
    fam2.mixed_moment = [&scaled](const std::vector<int>& idx) { return scaled.mixed(idx); };
    CHECK(joint_cumulant(fam2, {0, 1, 2}) == Rational(5, 3) * joint_cumulant(fam, {0, 1, 2}));
}

TEST_CASE("cumulants vanish on separated groups") {
    // Y0, Y1 share bit 0; Y2, Y3 share bit 1; groups independent
    BitFamily bf;
    bf.n_bits = 2;
    bf.vars = {
        [](std::uint64_t w) { return Rational(w & 1); },
        [](std::uint64_t w) { return Rational((w & 1) ? 3 : 1); },
        [](std::uint64_t w) { return Rational(w >> 1 & 1); },
        [](std::uint64_t w) { return Rational((w >> 1 & 1) ? -2 : 5); },
    };
    DependencyFamily fam;
    fam.N = 4;
    fam.edges = {{0, 1}, {2, 3}};
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(5);
    CHECK(joint_cumulant(fam, {0, 2}) == Rational(0));
    CHECK(joint_cumulant(fam, {0, 1, 2}) == Rational(0));
    CHECK(joint_cumulant(fam, {0, 1, 2, 3}) == Rational(0));
    CHECK(check_dependency_graph(fam, 50, 11));
}

TEST_CASE("moebius inversion round trip, r <= 6") {
    // univariate: random rational moments -> cumulants -> moments
    CounterRng rng(3, 0);
    std::vector<Rational> moments;
    for (int i = 0; i < 6; ++i)
        moments.push_back(Rational((int128)(rng.next_u64() % 17) - 8, (int128)(rng.next_u64() % 5 + 1)));
    auto kappas = cumulants_from_moments(moments);
    auto back = moments_from_cumulants(kappas);
    for (int i = 0; i < 6; ++i) CHECK(back[i] == moments[i]);

    // joint: moment reconstructed from joint cumulants via the partition sum
    BitFamily bf;
    bf.n_bits = 3;
    bf.vars = {
        [](std::uint64_t w) { return Rational((w & 1) + (w >> 2 & 1)); },
        [](std::uint64_t w) { return Rational((w >> 1 & 1) ? 2 : -1); },
        [](std::uint64_t w) { return Rational((w >> 2 & 1) - 1); },
        [](std::uint64_t w) { return Rational(((w & 1) ^ (w >> 1 & 1)) ? 1 : 4); },
        [](std::uint64_t w) { return Rational((w >> 1 & 1) + (w >> 2 & 1)); },
        [](std::uint64_t w) { return Rational((w & 1) ? -3 : 2); },
    };
    DependencyFamily fam;
    fam.N = 6;
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(4);
    std::vector<int> idx = {0, 1, 2, 3, 4, 5};
    auto kappa_fn = [&fam](const std::vector<int>& sub) { return joint_cumulant(fam, sub); };
    CHECK(moment_from_cumulants(kappa_fn, idx) == bf.mixed(idx));
}

TEST_CASE("cumulant bound values") {
    // independent family: D = 0
    CHECK(cumulant_bound(5, 0, Rational(1), 3) == Rational(4 * 3 * 5));
    CHECK(cumulant_bound(3, 1, Rational(1), 2) == Rational(12));
    // r = 1 is the triangle inequality
    CHECK(cumulant_bound(7, 3, Rational(2), 1) == Rational(14));
    CHECK(cumulant_bound(5, 0, 1.0, 3) == doctest::Approx(60.0));
}

TEST_CASE("verify bound on a small family") {
    // Y0 = Y1 = B - 1/2, Y2 independent: kappa^2(X) = 5/4 <= 12
    BitFamily bf;
    bf.n_bits = 2;
    bf.vars = {
        [](std::uint64_t w) { return Rational((int128)(w & 1) * 2 - 1, 2); },
        [](std::uint64_t w) { return Rational((int128)(w & 1) * 2 - 1, 2); },
        [](std::uint64_t w) { return Rational((int128)(w >> 1 & 1) * 2 - 1, 2); },
    };
    DependencyFamily fam;
    fam.N = 3;
    fam.edges = {{0, 1}};
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.power_moment = [&bf](int m) { return bf.power(m); };
    fam.bound_A = Rational(1, 2);
    auto chk = verify_bound(fam, 2);
    CHECK(chk.exact_kappa == Rational(5, 4));
    CHECK(chk.bound == Rational(3)); // 2 * 2 * 3 * (1/2)^2
    CHECK(chk.ok);
    for (int r = 1; r <= 6; ++r) CHECK(verify_bound(fam, r).ok);
}

TEST_CASE("an over-sparse graph fails the spot check") {
    BitFamily bf;
    bf.n_bits = 1;
    bf.vars = {
        [](std::uint64_t w) { return Rational(w & 1); },
        [](std::uint64_t w) { return Rational(w & 1); },
    };
    DependencyFamily fam;
    fam.N = 2;
    fam.edges = {}; // wrong: the variables are equal
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(1);
    CHECK_FALSE(check_dependency_graph(fam, 100, 5));
}

TEST_CASE("sparse graph scheme packaging") {
    // iid reduction: D = 1
    auto s = sparse_graph_scheme(1000.0, 1.0, 2.0 * 1000.0, 0.0);
    CHECK(s.sigma2_n == doctest::Approx(2.0));
    CHECK(s.L_n == doctest::Approx(0.0));

    // the packaged estimate is invariant under the alpha/beta normalization:
    // evaluate the moderate-deviation display at the same physical threshold
    double N = 1e6, D = 50.0, k2 = 3.0e7, k3 = 4.0e8;
    auto pm = sparse_scheme_cumulant_model(N, D, k2, k3);
    CumulantModel m1{pm.alpha_n, pm.beta_n, pm.sigma2, pm.L};
    double sphys = 2.0e4; // P[S >= sphys]
    double T1 = sphys / (m1.beta_n * std::sqrt(m1.sigma2));
    // an alternative packaging with beta = 1
    double sigma2_alt = k2 / N;
    double L_alt = k3 / N * std::pow(sigma2_alt, 1.5) / std::pow(sigma2_alt, 3.0 / 2.0) / 1.0;
    CumulantModel m2{N, 1.0, sigma2_alt, k3 / N};
    double T2 = sphys / std::sqrt(sigma2_alt);
    auto e1 = cumulant_moderate(m1, T1);
    auto e2 = cumulant_moderate(m2, T2);
    (void)L_alt;
    CHECK(e1.log_prob == doctest::Approx(e2.log_prob).epsilon(1e-10));
}
