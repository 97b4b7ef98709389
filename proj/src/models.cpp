#include "modphi/models.hpp"

#include <algorithm>
#include <cmath>

#include "modphi/errors.hpp"
#include "modphi/parallel.hpp"
#include "modphi/rng.hpp"
#include "modphi/special.hpp"

namespace modphi {

double ExactDistribution::total() const {
    double s = 0;
    for (double m : masses) s += m;
    return s;
}

double ExactDistribution::mean() const {
    double s = 0;
    for (size_t i = 0; i < masses.size(); ++i) s += masses[i] * (double)value_at_index(i);
    return s;
}

double ExactDistribution::variance() const {
    double mu = mean(), s = 0;
    for (size_t i = 0; i < masses.size(); ++i) {
        double d = (double)value_at_index(i) - mu;
        s += masses[i] * d * d;
    }
    return s;
}

double ExactDistribution::third_central_moment() const {
    double mu = mean(), s = 0;
    for (size_t i = 0; i < masses.size(); ++i) {
        double d = (double)value_at_index(i) - mu;
        s += masses[i] * d * d * d;
    }
    return s;
}

double ExactDistribution::tail_geq(double threshold) const {
    double s = 0;
    // sum from the far end to keep the tiny tail masses from being absorbed
    for (size_t i = masses.size(); i-- > 0;) {
        if ((double)value_at_index(i) >= threshold)
            s += masses[i];
        else
            break;
    }
    return s;
}

double ExactDistribution::point(long long value) const {
    if (value < offset) return 0;
    long long d = value - offset;
    if (d % step != 0) return 0;
    size_t i = (size_t)(d / step);
    return i < masses.size() ? masses[i] : 0.0;
}

double ExactDistribution::log_mgf(double z) const {
    double mx = -1e300;
    for (size_t i = 0; i < masses.size(); ++i)
        if (masses[i] > 0) mx = std::max(mx, std::log(masses[i]) + z * (double)value_at_index(i));
    double s = 0;
    for (size_t i = 0; i < masses.size(); ++i)
        if (masses[i] > 0) s += std::exp(std::log(masses[i]) + z * (double)value_at_index(i) - mx);
    return mx + std::log(s);
}

double ExactDistribution::mgf(double z) const { return std::exp(log_mgf(z)); }

// ---------------------------------------------------------------------------

ExactDistribution cycles_exact(long long n) {
    if (n < 1 || n > 1000000) throw too_large_error("cycles_exact supports 1 <= n <= 1e6");
    // convolve Bernoulli(1/i); the support never needs more than ~4 log n + 20
    size_t kmax = (size_t)std::min<double>((double)n, 4.0 * std::log((double)std::max<long long>(n, 3)) + 24);
    std::vector<double> p(kmax + 2, 0.0);
    p[0] = 1.0;
    size_t used = 0;
    for (long long i = 1; i <= n; ++i) {
        double q = 1.0 / (double)i;
        size_t hi = std::min(used + 1, kmax + 1);
        for (size_t k = hi; k > 0; --k) p[k] = p[k] * (1 - q) + p[k - 1] * q;
        p[0] *= (1 - q);
        used = hi;
    }
    ExactDistribution d;
    d.offset = 0;
    d.step = 1;
    d.masses.assign(p.begin(), p.begin() + (long long)used + 1);
    return d;
}

std::complex<double> cycles_mgf(long long n, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    std::complex<double> w = std::exp(z) - 1.0;
    for (long long i = 1; i <= n; ++i) acc += std::log(1.0 + w / (double)i);
    return std::exp(acc);
}

std::vector<__int128> stirling_first_row(int n) {
    if (n < 1 || n > 33) throw too_large_error("stirling_first_row fits __int128 only for n <= 33");
    std::vector<__int128> row(n + 1, 0);
    row[1] = 1; // s(1, 1)
    for (int m = 2; m <= n; ++m)
        for (int k = m; k >= 1; --k) row[k] = row[k - 1] + (__int128)(m - 1) * row[k];
    return row;
}

bool cycles_exact_moments_check(int n) {
    // integer form of the convolution: M_k at step i are i! * masses, i.e. the
    // unsigned Stirling numbers; check sum k M_k = sum n!/i and the variance
    // identity (n!)^2 (H_n - H_n^(2)) = n! sum k^2 M_k - (sum k M_k)^2
    std::vector<BigNat> M(n + 1);
    M[0] = BigNat(1);
    for (int i = 1; i <= n; ++i) {
        for (int k = std::min(i, n); k > 0; --k) M[k] = M[k] * (std::uint64_t)(i - 1) + M[k - 1];
        M[0] = M[0] * (std::uint64_t)(i - 1);
    }
    // after the loop M_k = |s(n, k)| with denominator n!
    BigNat fact(1);
    for (int i = 2; i <= n; ++i) fact = fact * (std::uint64_t)i;

    BigNat sum_k, sum_k2, total;
    for (int k = 0; k <= n; ++k) {
        total += M[k];
        sum_k += M[k] * (std::uint64_t)k;
        sum_k2 += M[k] * (std::uint64_t)((std::uint64_t)k * (std::uint64_t)k);
    }
    if (!(total == fact)) return false;

    BigNat harmonic; // n! H_n = sum n!/i
    BigNat harmonic2; // (n!)^2 H_n^(2) = sum (n!/i)^2
    for (int i = 1; i <= n; ++i) {
        BigNat q = fact.div_exact((std::uint64_t)i);
        harmonic += q;
        harmonic2 += q * q;
    }
    if (!(sum_k == harmonic)) return false;

    // Var = H_n - H_n^(2):  n! sum_k2 - (sum_k)^2 == (n!)^2 H_n - (n!)^2 H_n^(2)
    BigNat lhs = fact * sum_k2;
    BigNat rhs = fact * harmonic + sum_k * sum_k;
    // rearranged to keep both sides nonnegative:
    // n! sum_k2 + (n!)^2 H_n^(2) == (n!)^2 H_n + (sum_k)^2... with sum_k = n! H_n:
    // lhs + harmonic2 == fact*harmonic + sum_k*sum_k
    return lhs + harmonic2 == rhs;
}

// ---------------------------------------------------------------------------

BahadurRaoResult bahadur_rao_check(long long n, double x, IidLaw which, double q) {
    BahadurRaoResult r{};
    if (which == IidLaw::bernoulli_half) q = 0.5;
    if (which == IidLaw::bernoulli || which == IidLaw::bernoulli_half) {
        if (x <= 0 || x >= 1) throw out_of_range_error("bernoulli x must lie in (0,1)");
        if (std::fabs(x - q) < 1e-12) throw out_of_range_error("x equals the mean (h = 0)");
        double k = n * x;
        if (std::fabs(k - std::round(k)) > 1e-9)
            throw validation_error("n x must be an integer for the lattice point mass");
        long long ik = (long long)std::llround(k);

        ModPhiModel model{bernoulli_law(q), (double)n, LimitingFunction::one(), {}, {}};
        r.estimate_point = lattice_point_mass(model, x).prob();
        r.estimate_tail = lattice_tail(model, x).prob();

        // exact binomial in log space
        auto log_pmf = [&](long long j) {
            return std::lgamma((double)n + 1) - std::lgamma((double)j + 1) -
                   std::lgamma((double)(n - j) + 1) + j * std::log(q) +
                   (n - j) * std::log1p(-q);
        };
        r.exact_point = std::exp(log_pmf(ik));
        double mx = log_pmf(ik);
        double s = 0;
        for (long long j = ik; j <= n; ++j) s += std::exp(log_pmf(j) - mx);
        r.exact_tail = std::exp(mx) * s;
    } else {
        // sum of Exponential(1): tail is the regularized upper incomplete gamma
        if (x <= 1.0) throw out_of_range_error("exponential sums need x > 1 for the upper tail");
        ModPhiModel model{exponential_law(), (double)n, LimitingFunction::one(), {}, {}};
        r.estimate_tail = nonlattice_tail(model, x).prob();
        r.exact_tail = gamma_q((double)n, (double)n * x);
        r.estimate_point = r.exact_point = 0;
    }
    r.ratio_point = r.exact_point > 0 ? r.estimate_point / r.exact_point : 0;
    r.ratio_tail = r.exact_tail > 0 ? r.estimate_tail / r.exact_tail : 0;
    return r;
}

// ---------------------------------------------------------------------------

PoissonBernoulli poisson_bernoulli(const std::vector<double>& p) {
    for (double pk : p)
        if (pk < 0 || pk >= 1) throw validation_error("poisson_bernoulli needs 0 <= p_k < 1");
    ExactDistribution d;
    d.offset = 0;
    d.step = 1;
    d.masses.assign(p.size() + 1, 0.0);
    d.masses[0] = 1.0;
    size_t used = 0;
    for (double pk : p) {
        for (size_t k = used + 1; k > 0; --k)
            d.masses[k] = d.masses[k] * (1 - pk) + d.masses[k - 1] * pk;
        d.masses[0] *= (1 - pk);
        ++used;
    }
    double t = 0;
    for (double pk : p) t += pk;
    std::vector<double> probs = p;
    auto psi = LimitingFunction::custom("poisson_bernoulli_residual", [probs](std::complex<double> z) {
        std::complex<double> w = std::exp(z) - 1.0;
        std::complex<double> acc = 0.0;
        for (double pk : probs) acc += std::log(1.0 + pk * w) - pk * w;
        return std::exp(acc);
    });
    return {std::move(d), t, std::move(psi), t < 10.0};
}

// ---------------------------------------------------------------------------

double ising_log_mgf(long long n, double beta, double z) {
    if (n < 3) throw validation_error("ising ring needs n >= 3");
    auto lambdas = [beta](double zz, double& lp, double& lm) {
        double disc = std::sqrt(std::sinh(zz) * std::sinh(zz) + std::exp(-2 * beta));
        lp = std::cosh(zz) + disc;
        lm = std::cosh(zz) - disc;
    };
    double lp, lm, lp0, lm0;
    lambdas(z, lp, lm);
    lambdas(0.0, lp0, lm0);
    // tr T^n = lp^n (1 + (lm/lp)^n); lm can be negative, n even/odd both fine
    double log_tr = n * std::log(lp) + std::log1p(std::pow(lm / lp, (double)n));
    double log_tr0 = n * std::log(lp0) + std::log1p(std::pow(lm0 / lp0, (double)n));
    return log_tr - log_tr0;
}

ExactDistribution ising_exact(long long n, double beta) {
    if (n < 3 || n > 4000) throw too_large_error("ising_exact supports 3 <= n <= 4000");
    // weights e^{-beta #disagreements}; DP over (current spin, #down spins so
    // far), ring closed by conditioning on the first spin. Each site rescales
    // both rows by 1/(1 + e^{-beta}) -- the exact growth rate of the dominant
    // transfer eigenvalue at z = 0 -- so the DP stays O(1); the common scale
    // cancels in the final normalization.
    const double w = std::exp(-beta);
    const double rescale = 1.0 / (1.0 + w);
    size_t len = (size_t)n + 1;
    std::vector<double> up(len, 0.0), down(len, 0.0), nup(len), ndown(len);
    ExactDistribution d;
    d.offset = -n;
    d.step = 2;
    d.masses.assign(len, 0.0);

    for (int first = 0; first < 2; ++first) {
        std::fill(up.begin(), up.end(), 0.0);
        std::fill(down.begin(), down.end(), 0.0);
        if (first == 0)
            up[0] = 1.0; // first spin +1, zero down spins
        else
            down[1] = 1.0;
        for (long long site = 1; site < n; ++site) {
            std::fill(nup.begin(), nup.end(), 0.0);
            std::fill(ndown.begin(), ndown.end(), 0.0);
            for (size_t k = 0; k <= (size_t)site; ++k) {
                if (up[k] != 0.0) {
                    nup[k] += up[k] * rescale;
                    ndown[k + 1] += up[k] * w * rescale;
                }
                if (down[k] != 0.0) {
                    ndown[k + 1] += down[k] * rescale;
                    nup[k] += down[k] * w * rescale;
                }
            }
            std::swap(up, nup);
            std::swap(down, ndown);
        }
        // close the ring against the first spin
        for (size_t k = 0; k < len; ++k) {
            double closed;
            if (first == 0)
                closed = up[k] + down[k] * w;
            else
                closed = down[k] + up[k] * w;
            if (closed != 0.0) d.masses[len - 1 - k] += closed; // m = n - 2k
        }
    }
    double z = d.total();
    for (double& m : d.masses) m /= z;
    return d;
}

// ---------------------------------------------------------------------------

double hyperbolic_zeros_cgf(double h, double z) {
    if (h <= 0) throw validation_error("hyperbolic area must be positive");
    double r2 = h / (h + 4 * kPi);
    double hc = std::cbrt(h);
    double w = std::expm1(z / hc);
    double acc = 0;
    double q = r2;
    while (q >= 1e-18) {
        acc += std::log1p(q * w);
        q *= r2;
    }
    return acc;
}

double hyperbolic_zeros_mean(double h) { return h / (4 * kPi); }

double hyperbolic_zeros_variance(double h) {
    double r2 = h / (h + 4 * kPi);
    // sum q(1-q) over q = r2^k: r2/(1-r2) - r2^2/(1-r2^2)
    return r2 / (1 - r2) - r2 * r2 / (1 - r2 * r2);
}

long long sample_hyperbolic_zeros(double h, std::uint64_t seed, std::uint64_t stream) {
    double r2 = h / (h + 4 * kPi);
    CounterRng rng(seed, stream);
    long long count = 0;
    double q = r2;
    while (q >= 1e-18) {
        if (rng.next_double() < q) ++count;
        q *= r2;
    }
    return count;
}

// ---------------------------------------------------------------------------

WeightedPerm weighted_perm(const ThetaSpec& spec, int n_max) {
    if (n_max < 1 || n_max > 4000) throw too_large_error("weighted_perm supports n_max <= 4000");
    for (double t : spec.table)
        if (t < 0) throw validation_error("theta weights must be nonnegative");
    if (spec.constant < 0) throw validation_error("theta weights must be nonnegative");

    Series g(n_max);
    for (int m = 1; m <= n_max; ++m) g[m] = spec.at(m) / m;

    Series hser = g.exp();
    WeightedPerm out;
    out.h.assign(n_max + 1, 0.0);
    for (int k = 0; k <= n_max; ++k) out.h[k] = hser[k];
    out.theta = spec.constant;
    out.K = 0.0;
    for (int m = 1; m <= (int)spec.table.size(); ++m)
        out.K += (spec.table[m - 1] - spec.constant) / m;

    std::vector<double> h_copy = out.h;
    Series g_copy = g;
    out.mgf = [g_copy, h_copy](int n, double w) {
        if (n < 0 || n >= (int)h_copy.size()) throw validation_error("n beyond the series order");
        if (h_copy[n] == 0.0) throw degenerate_error("zero partition function h_n");
        Series e = g_copy.scaled(std::exp(w)).exp();
        return e[n] / h_copy[n];
    };
    double theta = out.theta, K = out.K;
    auto mgf = out.mgf;
    out.psi_n = [mgf, theta, K](int n, double w) {
        double t_n = K + theta * std::log((double)n);
        return mgf(n, w) * std::exp(-std::expm1(w) * t_n);
    };
    return out;
}

// ---------------------------------------------------------------------------

std::vector<OmegaStatistics> omega_statistics(const std::vector<std::uint64_t>& checkpoints,
                                              bool parallel) {
    if (checkpoints.empty()) throw validation_error("need at least one checkpoint");
    std::uint64_t N = checkpoints.back();
    for (size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1])
            throw validation_error("checkpoints must be increasing");
    if (N > 100000000ull) throw too_large_error("omega sieve capped at 1e8");

    std::vector<std::uint8_t> omega((size_t)N + 1, 0);
    auto primes = primes_up_to((std::uint32_t)N);

    // additive sieve over segments; increments within a segment touch only
    // that segment, so segments are independent work units
    const std::uint64_t seg = 1 << 23;
    std::int64_t n_segs = (std::int64_t)((N + seg) / seg);
    chunked_reduce<int>(
        n_segs, 1, 0,
        [&](std::int64_t, std::int64_t c, std::int64_t) {
            std::uint64_t lo = std::max<std::uint64_t>((std::uint64_t)c * seg, 2);
            std::uint64_t hi = std::min(N + 1, (std::uint64_t)c * seg + seg);
            for (std::uint32_t p : primes) {
                if (p >= hi) break;
                std::uint64_t start = std::max<std::uint64_t>(p, ((lo + p - 1) / p) * (std::uint64_t)p);
                for (std::uint64_t j = start; j < hi; j += p) ++omega[(size_t)j];
            }
            return 0;
        },
        [](int a, int) { return a; }, parallel);

    std::vector<OmegaStatistics> out;
    size_t ci = 0;
    std::vector<std::uint64_t> hist(24, 0);
    for (std::uint64_t k = 1; k <= N; ++k) {
        ++hist[omega[(size_t)k]];
        if (k == checkpoints[ci]) {
            OmegaStatistics s;
            s.N = k;
            s.histogram = hist;
            out.push_back(std::move(s));
            ++ci;
        }
    }
    return out;
}

double OmegaStatistics::empirical_mgf(double z) const {
    double s = 0;
    for (size_t j = 0; j < histogram.size(); ++j) s += (double)histogram[j] * std::exp(z * (double)j);
    return s / (double)N;
}

double OmegaStatistics::empirical_mean() const {
    double s = 0;
    for (size_t j = 0; j < histogram.size(); ++j) s += (double)histogram[j] * (double)j;
    return s / (double)N;
}

std::uint64_t OmegaStatistics::tail_count(int m) const {
    std::uint64_t s = 0;
    for (size_t j = (size_t)std::max(0, m); j < histogram.size(); ++j) s += histogram[j];
    return s;
}

double omega_display_mgf(std::uint64_t N, double z, std::uint32_t prime_cutoff) {
    double x = std::expm1(z);
    double loglogN = std::log(std::log((double)N));
    double primes_part = weierstrass_product(x, IndexSet::primes, prime_cutoff).value;
    // the integer product has the closed form e^{-gamma x}/Gamma(1+x)
    double integers_part = std::exp(-kEulerGamma * x - std::lgamma(1.0 + x));
    // the exponent carries Mertens' constant (sum of prime reciprocals), which
    // folds the prime Weierstrass product into the Selberg-Delange constant
    // prod_p (1 + x/p)(1 - 1/p)^x / Gamma(1+x); an Euler-gamma exponent here
    // would leave the ratio to the sieve bounded away from 1
    return std::exp((loglogN + kMertens) * x) * primes_part * integers_part;
}

} // namespace modphi
