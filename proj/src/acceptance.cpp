#include "modphi/acceptance.hpp"

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <array>

#include "modphi/deviation.hpp"
#include "modphi/erdosrenyi.hpp"
#include "modphi/errors.hpp"
#include "modphi/models.hpp"
#include "modphi/multidim.hpp"
#include "modphi/multigraph.hpp"
#include "modphi/rng.hpp"
#include "modphi/setpartition.hpp"
#include "modphi/special.hpp"
#include "modphi/thoma.hpp"

namespace modphi::acceptance {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

struct Check {
    std::vector<std::string> lines;
    bool ok = true;
    void require(bool cond, std::string line) {
        lines.push_back((cond ? "  ok   " : "  FAIL ") + std::move(line));
        ok = ok && cond;
    }
    void info(std::string line) { lines.push_back("  info " + std::move(line)); }
};

// ---- 1: Legendre closed forms -------------------------------------------------

Check legendre_closed_forms(const SuiteOptions&) {
    Check c;
    double max_err = 0;
    auto g = gaussian_law(0.4, 1.7);
    for (int i = 0; i < 100; ++i) {
        double x = -3.0 + 6.0 * i / 99 + 0.4;
        auto lp = solve_saddle(g, x);
        double h = (x - 0.4) / 1.7;
        max_err = std::max(max_err, std::fabs(lp.h - h));
        max_err = std::max(max_err, std::fabs(lp.F - (x - 0.4) * (x - 0.4) / (2 * 1.7)));
        max_err = std::max(max_err, std::fabs(lp.Fpp - 1 / 1.7));
    }
    c.require(max_err <= 1e-10, fmt("gaussian grid max |error| = %.3e (tol 1e-10)", max_err));
    max_err = 0;
    auto p = poisson_law(1.3);
    for (int i = 0; i < 100; ++i) {
        double x = 0.1 + 5.0 * i / 99;
        auto lp = solve_saddle(p, x);
        max_err = std::max(max_err, std::fabs(lp.h - std::log(x / 1.3)));
        max_err = std::max(max_err, std::fabs(lp.F - (x * std::log(x / 1.3) - (x - 1.3))));
        max_err = std::max(max_err, std::fabs(lp.Fpp - 1 / x));
    }
    c.require(max_err <= 1e-10, fmt("poisson grid max |error| = %.3e (tol 1e-10)", max_err));
    return c;
}

// ---- 2: exact combinatorial identities ----------------------------------------

Check combinatorial_identities(const SuiteOptions& opt) {
    Check c;
    long long checked = 0;
    bool identity_ok = true;
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            MultiGraph g;
            g.n = n;
            int e = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++e)
                    if (mask >> e & 1) g.edges.push_back({i, j});
            if (!g.connected()) continue;
            auto [lhs, rhs] = bicolored_identity_check(g);
            identity_ok = identity_ok && lhs == rhs;
            ++checked;
        }
    }
    c.require(identity_ok, fmt("bicolored identity exact on %lld connected graphs (<= 5 vertices)",
                               checked));

    CounterRng rng(opt.seed, 2);
    bool tutte_ok = true, order_ok = true;
    for (int t = 0; t < 200; ++t) {
        int n = 2 + (int)(rng.next_u64() % 6);
        int m = 1 + (int)(rng.next_u64() % 14);
        MultiGraph g;
        g.n = n;
        for (int e = 0; e < m; ++e)
            g.edges.push_back({(int)(rng.next_u64() % n), (int)(rng.next_u64() % n)});
        long long F = f_functional(g);
        long long ST = spanning_tree_count(g);
        order_ok = order_ok && 0 <= F && F <= ST;
        if (g.connected() && g.edge_count() <= 20) {
            tutte_ok = tutte_ok && F == tutte_point(g, 1, 0) && ST == tutte_point(g, 1, 1);
        }
    }
    c.require(order_ok, "0 <= F_H <= ST_H on 200 random multigraphs");
    c.require(tutte_ok, "F_H = T(1,0) and ST_H = T(1,1) on the connected ones");
    return c;
}

// ---- 3: dependency-graph cumulant bound ----------------------------------------

// brute-force family: integer-valued Y over uniform bits, power sums exact
struct BruteFamily {
    int N;
    int bits;
    std::vector<std::pair<int, int>> edges;
    // value of Y_i at a bit word
    std::function<int(int, std::uint64_t)> value;

    std::vector<Rational> power_moments(int rmax) const {
        std::vector<int128> sums(rmax, 0);
        for (std::uint64_t w = 0; w < (1ull << bits); ++w) {
            long long x = 0;
            for (int i = 0; i < N; ++i) x += value(i, w);
            int128 p = 1;
            for (int r = 0; r < rmax; ++r) {
                p = Rational::mul_checked(p, (int128)x);
                sums[r] = Rational::add_checked(sums[r], p);
            }
        }
        std::vector<Rational> out(rmax);
        Rational den(int128(1) << bits);
        for (int r = 0; r < rmax; ++r) out[r] = Rational(sums[r]) / den;
        return out;
    }
};

Check cumulant_bound_families(const SuiteOptions& opt) {
    Check c;
    int families = 0, violations = 0;
    double worst_margin = 1e300;
    CounterRng rng(opt.seed, 3);

    auto push = [&](const BruteFamily& f, int D) {
        auto moments = f.power_moments(6);
        auto kappas = cumulants_from_moments(moments);
        for (int r = 1; r <= 6; ++r) {
            Rational bound = cumulant_bound(f.N, D, Rational(1), r);
            if (!(kappas[r - 1].abs() <= bound)) ++violations;
            double margin = bound.to_double() - std::fabs(kappas[r - 1].to_double());
            worst_margin = std::min(worst_margin, margin);
        }
        ++families;
    };

    // 2-dependent chains: Y_i = +-1 as a seeded function of bits i, i+1, i+2
    for (int fam = 0; fam < 25; ++fam) {
        BruteFamily f;
        f.N = 6 + (int)(rng.next_u64() % 7); // 6..12
        f.bits = f.N + 2;
        std::vector<std::array<int, 8>> tables(f.N);
        for (auto& t : tables)
            for (int b = 0; b < 8; ++b) t[b] = (rng.next_u64() & 1) ? 1 : -1;
        f.value = [tables](int i, std::uint64_t w) {
            int key = (int)((w >> i) & 7ull);
            return tables[i][key];
        };
        for (int i = 0; i < f.N; ++i)
            for (int j = i + 1; j < f.N && j <= i + 2; ++j) f.edges.push_back({i, j});
        push(f, 4);
    }

    // clique-structured: Y_i = s_i (2 C_{clique(i)} - 1), one shared bit per clique
    for (int fam = 0; fam < 25; ++fam) {
        BruteFamily f;
        f.N = 8 + (int)(rng.next_u64() % 7); // 8..14
        std::vector<int> clique_of(f.N);
        int cliques = 0;
        int filled = 0;
        int max_size = 0;
        while (filled < f.N) {
            int size = 2 + (int)(rng.next_u64() % 4); // 2..5
            size = std::min(size, f.N - filled);
            for (int i = 0; i < size; ++i) clique_of[filled + i] = cliques;
            filled += size;
            max_size = std::max(max_size, size);
            ++cliques;
        }
        f.bits = cliques;
        std::vector<int> sign(f.N);
        for (auto& s : sign) s = (rng.next_u64() & 1) ? 1 : -1;
        f.value = [clique_of, sign](int i, std::uint64_t w) {
            return sign[i] * ((w >> clique_of[i] & 1) ? 1 : -1);
        };
        for (int i = 0; i < f.N; ++i)
            for (int j = i + 1; j < f.N; ++j)
                if (clique_of[i] == clique_of[j]) f.edges.push_back({i, j});
        push(f, max_size - 1);
    }

    c.require(violations == 0,
              fmt("|kappa^(r)| <= 2^(r-1) r^(r-2) N (D+1)^(r-1) A^r on %d families, r <= 6 "
                  "(violations: %d, worst margin %.3g)",
                  families, violations, worst_margin));
    return c;
}

// ---- 4: moebius round trip -----------------------------------------------------

Check moebius_round_trip(const SuiteOptions& opt) {
    Check c;
    CounterRng rng(opt.seed, 4);
    bool uni_ok = true;
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> m;
        for (int i = 0; i < 6; ++i)
            m.push_back(Rational((int128)(rng.next_u64() % 21) - 10,
                                 (int128)(rng.next_u64() % 7 + 1)));
        auto back = moments_from_cumulants(cumulants_from_moments(m));
        for (int i = 0; i < 6; ++i) uni_ok = uni_ok && back[i] == m[i];
    }
    c.require(uni_ok, "moments -> cumulants -> moments exact on 20 random rational vectors");

    // joint version on a 6-variable bit family
    struct {
        std::vector<std::function<Rational(std::uint64_t)>> vars;
        Rational mixed(const std::vector<int>& idx) const {
            Rational acc(0);
            for (std::uint64_t w = 0; w < 8; ++w) {
                Rational prod(1);
                for (int i : idx) prod *= vars[i](w);
                acc += prod;
            }
            return acc / Rational(8);
        }
    } bf;
    bf.vars = {
        [](std::uint64_t w) { return Rational((int128)(w & 1) * 2 - 1); },
        [](std::uint64_t w) { return Rational((int128)(w >> 1 & 1) + 1); },
        [](std::uint64_t w) { return Rational((int128)(w >> 2 & 1) * 3 - 1); },
        [](std::uint64_t w) { return Rational((int128)((w & 1) ^ (w >> 2 & 1))); },
        [](std::uint64_t w) { return Rational((int128)(w >> 1 & 1) - (int128)(w & 1)); },
        [](std::uint64_t w) { return Rational((int128)(w >> 2 & 1) + (int128)(w >> 1 & 1)); },
    };
    DependencyFamily fam;
    fam.N = 6;
    fam.mixed_moment = [&bf](const std::vector<int>& idx) { return bf.mixed(idx); };
    fam.bound_A = Rational(2);
    std::vector<int> idx = {0, 1, 2, 3, 4, 5};
    auto kappa_fn = [&fam](const std::vector<int>& sub) { return joint_cumulant(fam, sub); };
    c.require(moment_from_cumulants(kappa_fn, idx) == bf.mixed(idx),
              "joint moment reconstructed from joint cumulants at r = 6 (exact)");
    return c;
}

// ---- 5: cycle counts ------------------------------------------------------------

Check cycles_criterion(const SuiteOptions&) {
    Check c;
    double prev_point = 1e9, prev_tail = 1e9;
    double final_point = 0, final_tail = 0;
    bool monotone = true;
    for (long long n : {1000LL, 31623LL, 1000000LL}) {
        double t = std::log((double)n);
        long long k = (long long)std::llround(2 * t);
        double x = (double)k / t;
        ModPhiModel model{poisson_law(1.0), t, LimitingFunction::inv_gamma_exp(), {}, {}};
        auto d = cycles_exact(n);
        double exact_point = d.point(k);
        double exact_tail = d.tail_geq((double)k);
        double rp = lattice_point_mass(model, x).prob() / exact_point;
        double rt = lattice_tail(model, x).prob() / exact_tail;
        monotone = monotone && std::fabs(rp - 1) < prev_point && std::fabs(rt - 1) < prev_tail;
        prev_point = std::fabs(rp - 1);
        prev_tail = std::fabs(rt - 1);
        final_point = rp;
        final_tail = rt;
    }
    c.require(final_point > 0.85 && final_point < 1.15,
              fmt("point-mass ratio at n = 1e6: %.4f (in [0.85, 1.15])", final_point));
    c.require(final_tail > 0.85 && final_tail < 1.15,
              fmt("tail ratio at n = 1e6: %.4f (in [0.85, 1.15])", final_tail));
    c.require(monotone, "|ratio - 1| shrinks monotonically over n = 1e3, 10^4.5, 1e6");
    return c;
}

// ---- 6: Bahadur-Rao --------------------------------------------------------------

Check bahadur_rao_criterion(const SuiteOptions&) {
    Check c;
    auto r = bahadur_rao_check(1000, 0.75, IidLaw::bernoulli_half);
    c.require(std::fabs(r.ratio_point - 1) < 0.01,
              fmt("point estimate / exact binomial = %.5f (tol 1%%)", r.ratio_point));
    c.require(std::fabs(r.ratio_tail - 1) < 0.03,
              fmt("tail estimate / exact binomial = %.5f (tol 3%%)", r.ratio_tail));
    return c;
}

// ---- 7: crossover ----------------------------------------------------------------

Check crossover_criterion(const SuiteOptions&) {
    Check c;
    double t = 1e4;
    ModPhiModel model{poisson_law(1.0), t, LimitingFunction::one(), {}, {}};
    double ymax = std::pow(t, 0.25);
    double worst = 0;
    // thresholds are placed at half-integers: the exact tail of a lattice
    // variable is a step function, and tau = m - 1/2 makes P[X >= tau] an
    // unambiguous quantity for both sides of the comparison
    for (int j = 0; j < 10; ++j) {
        long long m = (long long)std::llround(t + (j == 0 ? 1.0 : std::sqrt(t) * ymax * j / 9));
        double tau = (double)m - 0.5;
        double y = (tau - t) / std::sqrt(t);
        double est = crossover_tail(model, y).prob();
        double exact = gamma_p((double)m, t); // P[Pois(t) >= m]
        worst = std::max(worst, std::fabs(est / exact - 1));
    }
    c.require(worst < 0.05, fmt("worst |estimate/exact - 1| over 10 points in [0, t^(1/4)]: %.4f "
                                "(tol 5%%)",
                                worst));
    return c;
}

// ---- 8: Berry-Esseen -------------------------------------------------------------

Check berry_esseen_criterion(const SuiteOptions&) {
    Check c;
    long long n = 100;
    ModPhiModel m{exponential_law(), (double)n, LimitingFunction::one(), {}, {}};
    double sup_gn = 0, sup_phi = 0;
    for (int i = 0; i <= 200; ++i) {
        double x = -4.0 + 8.0 * i / 200;
        double exact = gamma_p((double)n, (double)n + std::sqrt((double)n) * x);
        sup_gn = std::max(sup_gn, std::fabs(exact - berry_esseen_cdf(m, x)));
        sup_phi = std::max(sup_phi, std::fabs(exact - (1.0 - gaussian_tail(x))));
    }
    c.require(sup_phi / sup_gn >= 3.0,
              fmt("sup|F - G_n| = %.2e vs sup|F - Phi| = %.2e (improvement %.1fx >= 3x)", sup_gn,
                  sup_phi, sup_phi / sup_gn));
    return c;
}

// ---- 9: Erdos-Renyi ---------------------------------------------------------------

Check erdos_renyi_criterion(const SuiteOptions& opt) {
    Check c;
    Rational p(1, 2);
    auto tri = pattern_triangle();
    bool exact_ok = true;
    for (int n = 1; n <= 6; ++n) {
        auto brute = exact_cumulants_bruteforce(n, tri, p);
        exact_ok = exact_ok && brute.kappa2 == eval_polynomial(cumulant_polynomial(tri, p, 2), n);
        exact_ok = exact_ok && brute.kappa3 == eval_polynomial(cumulant_polynomial(tri, p, 3), n);
        if (n >= 2) exact_ok = exact_ok && brute.kappa2 == triangle_kappa2_closed_form(n, p);
    }
    c.require(exact_ok, "brute-force kappa^2, kappa^3 match the closed-form oracle at n <= 6");

    auto fit2 = polynomiality_check(tri, p, 2, {1, 2, 3, 4, 5}, 6);
    auto fit3 = polynomiality_check(tri, p, 3, {1, 2, 3, 4, 5, 6}, 2);
    auto [s2q, Lq] = sigma2_L_rational(tri, p);
    c.require(fit2.coeffs.back() == s2q && fit2.residual_at_holdout == Rational(0),
              fmt("interpolated kappa^2 leading coefficient = %s = 18 p^5 (1-p) exactly",
                  fit2.coeffs.back().str().c_str()));
    c.require(fit3.coeffs.back() == Lq && fit3.residual_at_holdout == Rational(0),
              fmt("interpolated kappa^3 leading coefficient = %s = 108 p^7 (1-p)(7-8p) exactly",
                  fit3.coeffs.back().str().c_str()));

    // Monte Carlo tail at n = 150
    int n = 150;
    double pd = 0.5, v = 1.285;
    std::int64_t trials = opt.fast ? 20000 : 100000;
    double tol = opt.fast ? 0.30 : 0.15;
    double threshold = std::pow((double)n, 3) * 0.125 + (double)n * n * (v - 3 * 0.125);
    auto est = triangle_deviation(n, pd, v);
    auto mc = mc_triangle_tail(n, pd, threshold, trials, opt.seed + 9, opt.parallel);
    double diff = std::fabs(est.prob() - mc.tail);
    bool ok = diff <= std::max(tol * mc.tail, 3 * mc.stderr_);
    c.require(ok, fmt("tail estimate %.5g vs empirical %.5g +- %.2g over %lld graphs "
                      "(|diff| <= max(%.0f%%, 3 se))",
                      est.prob(), mc.tail, mc.stderr_, (long long)trials, tol * 100));
    // cross-validation with the asymptotics removed: exact kappa^2/kappa^3 from
    // the classification polynomials plus the full Gaussian tail instead of its
    // 1/(z sqrt(2 pi)) leading term
    double k2 = eval_polynomial(cumulant_polynomial(tri, p, 2), n).to_double();
    double k3 = eval_polynomial(cumulant_polynomial(tri, p, 3), n).to_double();
    double mean = eval_polynomial(cumulant_polynomial(tri, p, 1), n).to_double();
    double zdev = (threshold - mean) / std::sqrt(k2);
    double corrected = gaussian_tail(zdev) * std::exp(k3 * std::pow(threshold - mean, 3) /
                                                      (6 * k2 * k2 * k2));
    c.info(fmt("exact-cumulant crossover-form value %.5g (ratio to empirical %.4f)", corrected,
               corrected / mc.tail));
    return c;
}

// ---- 10: Ising --------------------------------------------------------------------

Check ising_criterion(const SuiteOptions&) {
    Check c;
    long long n = 2000;
    double beta = 0.5, x = 0.8;
    auto d = ising_exact(n, beta);
    bool mgf_ok = true;
    double worst = 0;
    for (double z : {-0.15, 0.02, 0.2}) {
        double diff = std::fabs(d.log_mgf(z) - ising_log_mgf(n, beta, z));
        worst = std::max(worst, diff);
        mgf_ok = mgf_ok && diff < 1e-10 * std::max(1.0, std::fabs(ising_log_mgf(n, beta, z)));
    }
    c.require(mgf_ok, fmt("DP log-mgf vs eigenvalue closed form: worst |diff| = %.2e (tol 1e-10)",
                          worst));

    double sigma2 = std::exp(beta); // kappa^2(M_n)/n limit from the eigenvalue expansion
    double threshold = x * std::pow((double)n, 0.75);
    double exact = d.tail_geq(threshold);
    CumulantModel cm{(double)n, 1.0, sigma2, 0.0};
    double T = threshold / std::sqrt(sigma2);
    double est = cumulant_moderate(cm, T).prob();
    c.require(std::fabs(est / exact - 1) < 0.10,
              fmt("moderate-deviation estimate %.5g vs exact DP tail %.5g (ratio %.4f, tol 10%%)",
                  est, exact, est / exact));
    return c;
}

// ---- 11: 2-D walk -----------------------------------------------------------------

Check walk_criterion(const SuiteOptions& opt) {
    Check c;
    int n = 400, bins = 36;
    // acceptance ~ e^-4: the radial tail of the walk is exp(-sqrt(n) r^2) for
    // step covariance I/2, so r = sqrt(4/sqrt(n))
    double r = std::sqrt(4.0 / std::sqrt((double)n));
    std::int64_t trials = opt.fast ? 100000 : 1000000;
    auto h = walk2d_conditional_mc(n, r, trials, opt.seed + 11, bins, opt.parallel);
    c.info(fmt("acceptance rate %.5f (target e^-4 = %.5f)", h.acceptance_rate(),
               std::exp(-4.0)));
    auto target = walk2d_density_bins(r, bins);
    double tv = 0;
    for (int i = 0; i < bins; ++i)
        tv += std::fabs((double)h.counts[i] / (double)h.accepted - target[i]);
    tv /= 2;
    double tol = opt.fast ? 0.10 : 0.05;
    c.require(tv <= tol, fmt("TV(conditional angle histogram, F(r, theta)) = %.4f (tol %.2f)",
                             tv, tol));

    auto u = walk2d_conditional_mc(n, 0.0, trials, opt.seed + 12, bins, opt.parallel);
    int base = bins / 4;
    double chi2 = 0;
    for (int i = 0; i < base; ++i) {
        double tot = 0;
        for (int q = 0; q < 4; ++q) tot += (double)u.counts[i + q * base];
        if (tot == 0) continue;
        for (int q = 0; q < 4; ++q) {
            double d2 = (double)u.counts[i + q * base] - tot / 4;
            chi2 += d2 * d2 / (tot / 4);
        }
    }
    double pval = gamma_q(3.0 * base / 2.0, chi2 / 2.0);
    c.require(pval > 0.01,
              fmt("unconditioned histogram uniform within the 4-fold symmetry: chi2 p = %.4f "
                  "(> 0.01)",
                  pval));
    return c;
}

// ---- 12: weighted permutations -----------------------------------------------------

Check weighted_perm_criterion(const SuiteOptions&) {
    Check c;
    ThetaSpec ewens2{{}, 2.0};
    auto wp = weighted_perm(ewens2, 2000);
    double ratio = wp.h[2000] / (std::pow(2000.0, 1.0) / std::tgamma(2.0));
    c.require(ratio > 0.99 && ratio < 1.01,
              fmt("h_n / (n^(theta-1)/Gamma(theta)) = %.5f (in [0.99, 1.01])", ratio));

    double worst = 0;
    for (double w : {-0.5, 0.0, 0.3, 0.5}) {
        double target = std::exp(std::lgamma(2.0) - std::lgamma(2.0 * std::exp(w)));
        worst = std::max(worst, std::fabs(wp.psi_n(2000, w) / target - 1));
    }
    c.require(worst < 0.02,
              fmt("psi_n(w) vs Gamma(theta)/Gamma(theta e^w): worst |ratio-1| = %.4f (tol 2%%)",
                  worst));

    ThetaSpec uniform{{}, 1.0};
    auto wp1 = weighted_perm(uniform, 200);
    double worst_mgf = 0;
    for (int nn : {10, 50, 100, 200})
        for (double w : {-0.4, 0.3, 0.8}) {
            double lhs = wp1.mgf(nn, w);
            double rhs = cycles_mgf(nn, {w, 0}).real();
            worst_mgf = std::max(worst_mgf, std::fabs(lhs - rhs) / std::fabs(rhs));
        }
    c.require(worst_mgf <= 1e-10,
              fmt("theta = 1 series reproduce the cycle mgf to %.2e (tol 1e-10)", worst_mgf));
    return c;
}

// ---- 13: hyperbolic zeros ----------------------------------------------------------

Check zeros_criterion(const SuiteOptions& opt) {
    Check c;
    double h = 1e4, z = 1.0;
    double hc = std::cbrt(h);
    // odd part of the rescaled cgf kills the even cumulants; the exact mean
    // term h^(2/3) z / 4 pi is subtracted
    double modd = hyperbolic_zeros_mean(h) / hc * z;
    double cubic =
        (0.5 * (hyperbolic_zeros_cgf(h, z) - hyperbolic_zeros_cgf(h, -z)) - modd) / (z * z * z);
    double target = 1.0 / (144 * kPi);
    c.require(std::fabs(cubic / target - 1) < 0.02,
              fmt("cubic cgf coefficient %.6e vs z^3/(144 pi) = %.6e (ratio %.4f, tol 2%%)",
                  cubic, target, cubic / target));

    std::int64_t draws = opt.fast ? 10000 : 100000;
    double s = 0, s2 = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
        double x = (double)sample_hyperbolic_zeros(h, opt.seed + 13, (std::uint64_t)i);
        s += x;
        s2 += x * x;
    }
    double mean = s / (double)draws;
    double se = std::sqrt((s2 / (double)draws - mean * mean) / (double)draws);
    double target_mean = h / (4 * kPi);
    c.require(std::fabs(mean - target_mean) <= 4 * se,
              fmt("sampler mean %.3f vs h/4pi = %.3f (|diff| = %.2f se, tol 4 se)", mean,
                  target_mean, std::fabs(mean - target_mean) / se));
    return c;
}

// ---- 14: character values ----------------------------------------------------------

Check character_criterion(const SuiteOptions&) {
    Check c;
    ThomaParameter w{{0.6, 0.3}, {}};
    auto lim = sigma2_L_char(w, 2);

    std::vector<double> vals;
    for (int n : {6, 8, 10}) {
        auto kap = char_cumulants_exact(w, Partition{2}, n, 2);
        vals.push_back(n * kap[1]);
    }
    // the literal clause: the raw value at n = 10 within 20% of the limit.
    // the exact cumulant polynomial gives n kappa^2 = sigma^2 + c/n + O(1/n^2)
    // with c ~ 9 sigma^2, so this cannot hold at n = 10; reported as measured.
    double raw_err = std::fabs(vals[2] - lim.sigma2) / lim.sigma2;
    c.require(raw_err < 0.2,
              fmt("n kappa^2 at n = 10: %.4f vs sigma^2 = %.4f (rel err %.0f%%, tol 20%%)",
                  vals[2], lim.sigma2, 100 * raw_err));
    c.require(vals[0] > vals[1] && vals[1] > vals[2] && vals[2] > lim.sigma2,
              fmt("n kappa^2 monotone toward the limit over n = 6, 8, 10: %.4f > %.4f > %.4f",
                  vals[0], vals[1], vals[2]));
    // supplementary: quadratic-in-1/n extrapolation of the same three values
    double x6 = 1.0 / 6, x8 = 1.0 / 8, x10 = 1.0 / 10;
    double extrap = vals[0] * (x8 * x10) / ((x6 - x8) * (x6 - x10)) +
                    vals[1] * (x6 * x10) / ((x8 - x6) * (x8 - x10)) +
                    vals[2] * (x6 * x8) / ((x10 - x6) * (x10 - x8));
    c.info(fmt("1/n-extrapolated limit of the same data: %.4f (sigma^2 = %.4f)", extrap,
               lim.sigma2));

    bool bound_ok = true;
    for (int k : {2, 3})
        for (int n = k; n <= 10; ++n) {
            auto kap = char_cumulants_exact(w, Partition{k}, n, 3);
            for (int r = 1; r <= 3; ++r) {
                double bound =
                    std::pow((double)r, r - 2) * std::pow(2.0 * k * k / n, r - 1);
                bound_ok = bound_ok && std::fabs(kap[r - 1]) <= bound + 1e-12;
            }
        }
    c.require(bound_ok, "|kappa^(r)| <= r^(r-2) (2k^2/n)^(r-1) for r <= 3, n <= 10, k = 2, 3");

    // exact polynomiality with rational omega
    ThomaParameterQ wq{{Rational(3, 5), Rational(3, 10)}, {}};
    std::vector<Rational> xs, ys;
    for (int n = 2; n <= 5; ++n) {
        auto kap = char_cumulants_exact(wq, Partition{2}, n, 2);
        Rational nf = Rational(n) * Rational(n - 1);
        xs.push_back(Rational(n));
        ys.push_back(nf * nf * kap[1]);
    }
    std::vector<Rational> dd = ys;
    for (int lvl = 1; lvl < (int)xs.size(); ++lvl)
        for (int i = (int)xs.size() - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    auto evalp = [&](Rational x) {
        Rational acc = dd.back();
        for (int i = (int)xs.size() - 2; i >= 0; --i) acc = acc * (x - xs[i]) + dd[i];
        return acc;
    };
    auto kap6 = char_cumulants_exact(wq, Partition{2}, 6, 2);
    Rational nf6 = Rational(6) * Rational(5);
    Rational residual = evalp(Rational(6)) - nf6 * nf6 * kap6[1];
    c.require(residual == Rational(0),
              fmt("rational interpolation residual at held-out n = 6: %s", residual.str().c_str()));

    double total = 0;
    auto measure = central_measure(ThomaParameter{{0.5, 0.2}, {0.15, 0.05}}, 10);
    for (auto& [lam, mass] : measure) total += mass;
    c.require(std::fabs(total - 1.0) <= 1e-12,
              fmt("central measure mass at n = 10: 1 %+.2e", total - 1.0));
    return c;
}

// ---- 15: omega --------------------------------------------------------------------

Check omega_criterion(const SuiteOptions& opt) {
    Check c;
    auto stats = omega_statistics({100000, 1000000, 10000000}, opt.parallel);
    double z = 0.5;
    double prev = 1e9;
    bool decreasing = true;
    std::string seq;
    for (const auto& s : stats) {
        double ratio = s.empirical_mgf(z) / omega_display_mgf(s.N, z);
        double err = std::fabs(ratio - 1);
        decreasing = decreasing && err < prev;
        prev = err;
        seq += fmt("%s N=%.0e: %.4f", seq.empty() ? "" : ",", (double)s.N, ratio);
    }
    c.require(decreasing, "|mgf ratio - 1| strictly decreasing across N = 1e5, 1e6, 1e7:" + seq);
    return c;
}

} // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
    static const char* names[] = {
        "legendre closed forms",
        "exact combinatorial identities",
        "dependency-graph cumulant bound",
        "moebius round trip",
        "cycle counts vs bernoulli convolution",
        "bahadur-rao",
        "crossover formula vs exact poisson tail",
        "berry-esseen expansion",
        "erdos-renyi subgraph counts",
        "ising magnetization",
        "2-d walk conditioned on large radius",
        "weighted permutations",
        "hyperbolic zeros",
        "random character values",
        "omega(n) mod-poisson trend",
    };
    if (id < 1 || id > 15) throw validation_error("criterion id must be 1..15");
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    switch (id) {
        case 1: c = legendre_closed_forms(opt); break;
        case 2: c = combinatorial_identities(opt); break;
        case 3: c = cumulant_bound_families(opt); break;
        case 4: c = moebius_round_trip(opt); break;
        case 5: c = cycles_criterion(opt); break;
        case 6: c = bahadur_rao_criterion(opt); break;
        case 7: c = crossover_criterion(opt); break;
        case 8: c = berry_esseen_criterion(opt); break;
        case 9: c = erdos_renyi_criterion(opt); break;
        case 10: c = ising_criterion(opt); break;
        case 11: c = walk_criterion(opt); break;
        case 12: c = weighted_perm_criterion(opt); break;
        case 13: c = zeros_criterion(opt); break;
        case 14: c = character_criterion(opt); break;
        case 15: c = omega_criterion(opt); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = names[id - 1];
    r.passed = c.ok;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.details = std::move(c.lines);
    return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 15; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

} // namespace modphi::acceptance
