#include "modphi/erdosrenyi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "modphi/errors.hpp"
#include "modphi/parallel.hpp"
#include "modphi/rng.hpp"
#include "modphi/setpartition.hpp"
#include "modphi/special.hpp"

namespace modphi {

PatternGraph pattern_edge() { return {2, {{0, 1}}}; }
PatternGraph pattern_triangle() { return {3, {{0, 1}, {0, 2}, {1, 2}}}; }
PatternGraph pattern_path3() { return {3, {{0, 1}, {1, 2}}}; }

PatternGraph pattern_from_edges(int k, const std::vector<std::pair<int, int>>& edges) {
    for (auto [u, v] : edges)
        if (u == v || u < 0 || v < 0 || u >= k || v >= k)
            throw validation_error("pattern must be simple and loopless on [k]");
    return {k, edges};
}

SampledGraph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1 || n > 4096) throw too_large_error("sample_gnp supports n <= 4096");
    SampledGraph g;
    g.n = n;
    size_t words = (size_t)(n + 63) / 64;
    g.rows.assign(n, std::vector<std::uint64_t>(words, 0));
    CounterRng rng(seed, stream);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) {
                g.rows[i][j >> 6] |= 1ull << (j & 63);
                g.rows[j][i >> 6] |= 1ull << (i & 63);
            }
    return g;
}

namespace {

long long count_copies_backtrack(const SampledGraph& g, const PatternGraph& pat) {
    // adjacency of the pattern restricted to earlier slots
    int k = pat.k;
    std::vector<std::vector<int>> back(k);
    for (auto [u, v] : pat.edges) {
        int a = std::min(u, v), b = std::max(u, v);
        back[b].push_back(a);
    }
    std::vector<int> assign(k, -1);
    std::vector<char> used(g.n, 0);
    long long count = 0;
    std::function<void(int)> rec = [&](int slot) {
        if (slot == k) {
            ++count;
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int u : back[slot])
                if (!g.has_edge(assign[u], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = 1;
            assign[slot] = v;
            rec(slot + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return count;
}

} // namespace

long long count_copies(const SampledGraph& g, const PatternGraph& pattern) {
    return count_copies_backtrack(g, pattern);
}

long long count_triangle_arrangements(const SampledGraph& g) {
    size_t words = g.rows.empty() ? 0 : g.rows[0].size();
    long long paths = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (size_t w = 0; w < words; ++w)
                paths += __builtin_popcountll(g.rows[i][w] & g.rows[j][w]);
        }
    // each unordered triangle shows up once per edge with the common-neighbor
    // count, i.e. 3 times; arrangements count it 3! = 6 times
    return 2 * paths;
}

namespace {

// required edge set of one ordered arrangement, as a bitmask over vertex pairs
std::uint32_t arrangement_edge_mask(const std::vector<int>& tuple, const PatternGraph& pat,
                                    const std::vector<std::vector<int>>& pair_index) {
    std::uint32_t m = 0;
    for (auto [u, v] : pat.edges) m |= 1u << pair_index[tuple[u]][tuple[v]];
    return m;
}

void all_arrangements(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> tuple(k);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int slot) {
        if (slot == k) {
            out.push_back(tuple);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            tuple[slot] = v;
            rec(slot + 1);
            used[v] = 0;
        }
    };
    rec(0);
}

} // namespace

SubgraphCumulants exact_cumulants_bruteforce(int n, const PatternGraph& pattern,
                                             const Rational& p) {
    if (n > 6) throw too_large_error("brute force over all graphs capped at n = 6");
    int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    int pi = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[i][j] = pair_index[j][i] = pi++;
        }

    std::vector<std::vector<int>> tuples;
    if (n >= pattern.k) all_arrangements(n, pattern.k, tuples);
    std::vector<std::uint32_t> masks;
    masks.reserve(tuples.size());
    for (const auto& t : tuples) masks.push_back(arrangement_edge_mask(t, pattern, pair_index));

    int128 a = p.num(), b = p.den();
    int128 c = b - a; // numerator of 1-p
    // weight numerator of a graph with e edges: a^e c^(pairs - e); denominator b^pairs
    std::vector<int128> apow(pairs + 1), cpow(pairs + 1);
    apow[0] = cpow[0] = 1;
    for (int i = 1; i <= pairs; ++i) {
        apow[i] = Rational::mul_checked(apow[i - 1], a);
        cpow[i] = Rational::mul_checked(cpow[i - 1], c);
    }

    int128 s1 = 0, s2 = 0, s3 = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        long long x = 0;
        for (std::uint32_t m : masks)
            if ((m & mask) == m) ++x;
        int e = __builtin_popcount(mask);
        int128 wnum = Rational::mul_checked(apow[e], cpow[pairs - e]);
        int128 xx = (int128)x;
        s1 = Rational::add_checked(s1, Rational::mul_checked(wnum, xx));
        s2 = Rational::add_checked(s2, Rational::mul_checked(wnum, xx * xx));
        s3 = Rational::add_checked(s3, Rational::mul_checked(wnum, xx * xx * xx));
    }
    Rational denom = Rational(b).pow(pairs);
    Rational m1 = Rational(s1) / denom;
    Rational m2 = Rational(s2) / denom;
    Rational m3 = Rational(s3) / denom;

    SubgraphCumulants out;
    out.n = n;
    out.method = "bruteforce";
    out.kappa1 = m1;
    out.kappa2 = m2 - m1 * m1;
    out.kappa3 = m3 - Rational(3) * m2 * m1 + Rational(2) * m1 * m1 * m1;
    return out;
}

namespace {

// Gluing pattern of r pattern copies: a set partition of the r*k vertex slots
// with at most one slot per copy in each block. kappa(G) times the falling
// factorial n^(blocks) summed over patterns gives kappa^(r) as a polynomial.
struct GluingAccumulator {
    int r, k;
    const PatternGraph& pat;
    Rational p;
    std::vector<Rational> poly; // coefficients of n^j

    void add_pattern(const std::vector<int>& block_of, int blocks) {
        // moments: for each subset of copies (via set partitions of [r]),
        // E[prod delta] = p^{#distinct glued edges}
        auto edges_of = [&](const std::vector<int>& copies) {
            std::vector<std::pair<int, int>> es;
            for (int c : copies)
                for (auto [u, v] : pat.edges) {
                    int bu = block_of[c * k + u], bv = block_of[c * k + v];
                    es.push_back({std::min(bu, bv), std::max(bu, bv)});
                }
            std::sort(es.begin(), es.end());
            es.erase(std::unique(es.begin(), es.end()), es.end());
            return (int)es.size();
        };
        Rational kappa(0);
        for_each_set_partition(r, [&](const SetPartition& sp) {
            Rational prod(1);
            for (const auto& blk : sp.blocks) prod *= p.pow(edges_of(blk));
            kappa += Rational(mobius(sp)) * prod;
        });
        if (kappa.is_zero()) return;
        // N_G = n (n-1) ... (n - blocks + 1): expand into monomials
        std::vector<Rational> ff = {Rational(1)};
        for (int j = 0; j < blocks; ++j) {
            std::vector<Rational> next(ff.size() + 1, Rational(0));
            for (size_t d = 0; d < ff.size(); ++d) {
                next[d + 1] += ff[d];
                next[d] -= Rational(j) * ff[d];
            }
            ff = next;
        }
        if (poly.size() < ff.size()) poly.resize(ff.size(), Rational(0));
        for (size_t d = 0; d < ff.size(); ++d) poly[d] += kappa * ff[d];
    }
};

} // namespace

std::vector<Rational> cumulant_polynomial(const PatternGraph& pattern, const Rational& p, int r) {
    if (r < 1 || r > 3) throw unsupported_order_error("cumulant_polynomial supports r <= 3");
    int k = pattern.k;
    int slots = r * k;
    GluingAccumulator acc{r, k, pattern, p, {}};

    // enumerate partitions of the slots with no two slots of the same copy in
    // a block; assign slots in order to an existing compatible block or a new one
    std::vector<int> block_of(slots, -1);
    std::vector<std::uint32_t> block_copies; // bitmask of copies present per block
    std::function<void(int)> rec = [&](int s) {
        if (s == slots) {
            acc.add_pattern(block_of, (int)block_copies.size());
            return;
        }
        int copy = s / k;
        for (int b = 0; b < (int)block_copies.size(); ++b) {
            if (block_copies[b] >> copy & 1) continue;
            block_copies[b] |= 1u << copy;
            block_of[s] = b;
            rec(s + 1);
            block_copies[b] &= ~(1u << copy);
        }
        block_copies.push_back(1u << copy);
        block_of[s] = (int)block_copies.size() - 1;
        rec(s + 1);
        block_copies.pop_back();
    };
    rec(0);
    return acc.poly;
}

Rational eval_polynomial(const std::vector<Rational>& coeffs, long long n) {
    Rational acc(0);
    Rational x((int128)n);
    for (size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
    return acc;
}

McCumulants mc_cumulants(int n, const PatternGraph& pattern, double p, std::int64_t trials,
                         std::uint64_t seed, bool parallel) {
    if (trials < 1000) throw validation_error("mc_cumulants needs trials >= 1000");
    const int n_blocks = 40; // delete-block jackknife
    struct Partial {
        std::vector<double> s1, s2, s3;
        std::vector<std::int64_t> cnt;
    };
    std::int64_t chunk = std::max<std::int64_t>(1, trials / 256);
    Partial init;
    init.s1.assign(n_blocks, 0);
    init.s2.assign(n_blocks, 0);
    init.s3.assign(n_blocks, 0);
    init.cnt.assign(n_blocks, 0);

    Partial tot = chunked_reduce<Partial>(
        trials, chunk, init,
        [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
            Partial pt;
            pt.s1.assign(n_blocks, 0);
            pt.s2.assign(n_blocks, 0);
            pt.s3.assign(n_blocks, 0);
            pt.cnt.assign(n_blocks, 0);
            for (std::int64_t t = lo; t < hi; ++t) {
                SampledGraph g = sample_gnp(n, p, seed, (std::uint64_t)t);
                double x = (double)count_copies(g, pattern);
                int b = (int)(t % n_blocks);
                pt.s1[b] += x;
                pt.s2[b] += x * x;
                pt.s3[b] += x * x * x;
                ++pt.cnt[b];
            }
            return pt;
        },
        [&](Partial a, const Partial& b) {
            for (int i = 0; i < n_blocks; ++i) {
                a.s1[i] += b.s1[i];
                a.s2[i] += b.s2[i];
                a.s3[i] += b.s3[i];
                a.cnt[i] += b.cnt[i];
            }
            return a;
        },
        parallel);

    auto kstats = [](double s1, double s2, double s3, double N) {
        double m1 = s1 / N;
        double m2 = s2 / N - m1 * m1;
        double m3 = s3 / N - 3 * m1 * (s2 / N) + 2 * m1 * m1 * m1;
        // unbiased k-statistics
        double k2 = N / (N - 1) * m2;
        double k3 = N * N / ((N - 1) * (N - 2)) * m3;
        return std::array<double, 3>{m1, k2, k3};
    };
    double S1 = 0, S2 = 0, S3 = 0;
    std::int64_t N = 0;
    for (int i = 0; i < n_blocks; ++i) {
        S1 += tot.s1[i];
        S2 += tot.s2[i];
        S3 += tot.s3[i];
        N += tot.cnt[i];
    }
    auto full = kstats(S1, S2, S3, (double)N);

    // jackknife over blocks
    std::array<double, 3> mean{0, 0, 0}, var{0, 0, 0};
    std::vector<std::array<double, 3>> loo(n_blocks);
    for (int i = 0; i < n_blocks; ++i) {
        loo[i] = kstats(S1 - tot.s1[i], S2 - tot.s2[i], S3 - tot.s3[i],
                        (double)(N - tot.cnt[i]));
        for (int j = 0; j < 3; ++j) mean[j] += loo[i][j] / n_blocks;
    }
    for (int i = 0; i < n_blocks; ++i)
        for (int j = 0; j < 3; ++j) {
            double d = loo[i][j] - mean[j];
            var[j] += d * d;
        }
    double fac = (double)(n_blocks - 1) / n_blocks;
    McCumulants out;
    out.kappa1 = full[0];
    out.kappa2 = full[1];
    out.kappa3 = full[2];
    out.se1 = std::sqrt(fac * var[0]);
    out.se2 = std::sqrt(fac * var[1]);
    out.se3 = std::sqrt(fac * var[2]);
    out.trials = N;
    return out;
}

std::pair<double, double> sigma2_L(const PatternGraph& pattern, double p) {
    if (p <= 0 || p >= 1) throw degenerate_error("sigma2_L needs 0 < p < 1");
    double h = pattern.h();
    double s2 = 2 * h * h * std::pow(p, 2 * h - 1) * (1 - p);
    double L = 12 * h * h * h * (h - 1) * std::pow(p, 3 * h - 2) * (1 - p) * (1 - p) +
               4 * h * h * h * std::pow(p, 3 * h - 2) * (1 - p) * (1 - 2 * p);
    return {s2, L};
}

std::pair<Rational, Rational> sigma2_L_rational(const PatternGraph& pattern, const Rational& p) {
    Rational one(1);
    int h = pattern.h();
    Rational q = one - p;
    Rational s2 = Rational(2 * h * h) * p.pow(2 * h - 1) * q;
    Rational L = Rational(12) * Rational(h).pow(3) * Rational(h - 1) * p.pow(3 * h - 2) * q * q +
                 Rational(4) * Rational(h).pow(3) * p.pow(3 * h - 2) * q * (one - Rational(2) * p);
    return {s2, L};
}

DeviationEstimate triangle_deviation(long long n, double p, double v) {
    auto [s2, L] = sigma2_L(pattern_triangle(), p);
    (void)s2;
    (void)L;
    double c = 9 * std::pow(p, 5) * (1 - p);
    double rate = v * v / (36 * std::pow(p, 5) * (1 - p));
    double leading = std::sqrt(c / (kPi * v * v));
    double correction =
        std::exp((7 - 8 * p) * v * v * v / (324.0 * n * std::pow(p, 8) * (1 - p) * (1 - p)));
    DeviationEstimate e;
    e.regime = Regime::cumulant_moderate;
    e.exponent_rate = rate;
    e.leading = leading;
    e.correction = correction;
    e.log_prob = -rate + std::log(leading * correction);
    e.boundary_flag = v < 1.0 || v * v > (double)n; // display valid for 1 << v << n^(1/2)
    return e;
}

McTail mc_triangle_tail(int n, double p, double threshold, std::int64_t trials,
                        std::uint64_t seed, bool parallel) {
    struct Partial {
        std::int64_t hits = 0;
    };
    std::int64_t chunk = std::max<std::int64_t>(1, trials / 512);
    Partial tot = chunked_reduce<Partial>(
        trials, chunk, Partial{},
        [&](std::int64_t, std::int64_t lo, std::int64_t hi) {
            Partial pt;
            for (std::int64_t t = lo; t < hi; ++t) {
                SampledGraph g = sample_gnp(n, p, seed, (std::uint64_t)t);
                if ((double)count_triangle_arrangements(g) >= threshold) ++pt.hits;
            }
            return pt;
        },
        [](Partial a, const Partial& b) {
            a.hits += b.hits;
            return a;
        },
        parallel);
    McTail out;
    out.hits = tot.hits;
    out.trials = trials;
    out.tail = (double)tot.hits / (double)trials;
    out.stderr_ = std::sqrt(out.tail * (1 - out.tail) / (double)trials);
    return out;
}

PolynomialFit polynomiality_check(const PatternGraph& pattern, const Rational& p, int r,
                                  const std::vector<int>& n_list, int holdout_n) {
    if (r < 1 || r > 3) throw unsupported_order_error("polynomiality_check supports r <= 3");
    // degree bound: r = 1 -> k; r = 2 -> 2k - 2; r = 3 -> 3k - 4
    int deg = r == 1 ? pattern.k : (r == 2 ? 2 * pattern.k - 2 : 3 * pattern.k - 4);
    if ((int)n_list.size() < deg + 1)
        throw insufficient_points_error("need at least deg+1 exact points");

    std::vector<Rational> xs, ys;
    for (int n : n_list) {
        SubgraphCumulants c = exact_cumulants_bruteforce(n, pattern, p);
        xs.push_back(Rational(n));
        ys.push_back(r == 1 ? c.kappa1 : (r == 2 ? c.kappa2 : c.kappa3));
    }
    // Newton divided differences -> monomial coefficients
    int m = (int)xs.size();
    std::vector<Rational> dd = ys;
    for (int level = 1; level < m; ++level)
        for (int i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rational> coeffs(m, Rational(0));
    std::vector<Rational> basis = {Rational(1)}; // prod (x - x_j)
    coeffs[0] = dd[0];
    for (int level = 1; level < m; ++level) {
        // basis *= (x - x_{level-1})
        std::vector<Rational> nb(basis.size() + 1, Rational(0));
        for (size_t d = 0; d < basis.size(); ++d) {
            nb[d + 1] += basis[d];
            nb[d] -= xs[level - 1] * basis[d];
        }
        basis = nb;
        for (size_t d = 0; d < basis.size(); ++d) coeffs[d] += dd[level] * basis[d];
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();

    PolynomialFit fit;
    fit.coeffs = coeffs;
    std::vector<Rational> oracle = cumulant_polynomial(pattern, p, r);
    fit.residual_at_holdout =
        eval_polynomial(coeffs, holdout_n) - eval_polynomial(oracle, holdout_n);
    return fit;
}

Rational triangle_kappa2_closed_form(long long n, const Rational& p) {
    // overlap classes |A cap A'| = 3 (same vertex set, 6 orderings) and = 2
    // (one shared edge): 6 nf3 (p^3 - p^6) + 18 nf4 p^5 (1 - p)
    auto ff = [n](int k) {
        Rational r(1);
        for (int i = 0; i < k; ++i) r *= Rational((int128)(n - i));
        return r;
    };
    Rational p3 = p.pow(3), p5 = p.pow(5), p6 = p.pow(6);
    return Rational(6) * ff(3) * (p3 - p6) + Rational(18) * ff(4) * p5 * (Rational(1) - p);
}

Rational edge_kappa2_closed_form(long long n, const Rational& p) {
    // only identical vertex pairs correlate: 2 nf2 p(1-p)
    Rational nf2 = Rational((int128)n) * Rational((int128)(n - 1));
    return Rational(2) * nf2 * p * (Rational(1) - p);
}

} // namespace modphi
