#include "modphi/thoma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>

#include "modphi/errors.hpp"

namespace modphi {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

using Key = std::pair<Partition, int>; // (shape, index into mu)

// Murnaghan-Nakayama through beta-numbers: with B = {lambda_i + (m-1-i)},
// removing a border strip of size s means replacing some b by b - s, valid
// when b - s >= 0 and not already in B; the strip height is the number of
// beta-numbers strictly between b - s and b.
long long mn_rec(const Partition& lambda, const Partition& mu, size_t mi,
                 std::map<Key, long long>& memo) {
    if (lambda.empty()) return 1;
    Key key{lambda, (int)mi};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int s = mu[mi];
    int m = (int)lambda.size();
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);

    long long acc = 0;
    for (int i = 0; i < m; ++i) {
        int target = beta[i] - s;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) clash = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition nl;
        for (int j = 0; j < m; ++j) {
            int part = nb[j] - (m - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sign = (height % 2 == 0) ? 1 : -1;
        acc += sign * mn_rec(nl, mu, mi + 1, memo);
    }
    memo[key] = acc;
    return acc;
}

} // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
    int n = 0, m = 0;
    for (int v : lambda) n += v;
    for (int v : mu) m += v;
    if (n != m) throw validation_error("character_value needs |lambda| = |mu|");
    if (n > 14) throw too_large_error("character tables capped at n = 14");
    static std::mutex cache_mutex;
    static std::map<std::pair<Partition, Partition>, long long> cache;
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::map<Key, long long> memo;
    long long v = mn_rec(lambda, mu, 0, memo);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = v;
    return v;
}

long long partition_dimension(const Partition& lambda) {
    int n = 0;
    for (int v : lambda) n += v;
    Partition ones(n, 1);
    return character_value(lambda, ones);
}

long long cycle_type_size(const Partition& mu) {
    std::map<int, int> mult;
    for (int v : mu) ++mult[v];
    long long z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

namespace {

template <class Scalar>
Scalar power_sum_impl(const ThomaParameterT<Scalar>& omega, int k) {
    if (k < 1) throw validation_error("power_sum needs k >= 1");
    if (k == 1) return Scalar(1);
    Scalar s(0);
    for (const auto& a : omega.alpha) {
        Scalar p = a;
        for (int i = 1; i < k; ++i) p = p * a;
        s = s + p;
    }
    Scalar sb(0);
    for (const auto& b : omega.beta) {
        Scalar p = b;
        for (int i = 1; i < k; ++i) p = p * b;
        sb = sb + p;
    }
    if (k % 2 == 0) return s - sb;
    return s + sb;
}

template <class Scalar>
Scalar tau_impl(const ThomaParameterT<Scalar>& omega, const Partition& mu) {
    Scalar t(1);
    for (int part : mu) t = t * power_sum_impl(omega, part);
    return t;
}

template <class Scalar>
std::map<Partition, Scalar> central_measure_impl(const ThomaParameterT<Scalar>& omega, int n) {
    if (n < 1 || n > 12) throw too_large_error("central_measure capped at n = 12");
    auto lambdas = partitions_of(n);
    auto mus = partitions_of(n);
    std::map<Partition, Scalar> out;
    for (const auto& lambda : lambdas) {
        Scalar mass(0);
        for (const auto& mu : mus) {
            Scalar term = tau_impl(omega, mu) * Scalar(character_value(lambda, mu));
            mass = mass + term / Scalar(cycle_type_size(mu));
        }
        out[lambda] = Scalar(partition_dimension(lambda)) * mass;
    }
    return out;
}

template <class Scalar>
std::vector<Scalar> char_cumulants_impl(const ThomaParameterT<Scalar>& omega, const Partition& mu,
                                        int n, int r) {
    if (r < 1 || r > 3) throw too_large_error("char_cumulants_exact supports r <= 3");
    int k = 0;
    for (int v : mu) k += v;
    if (k > n) throw validation_error("cycle type larger than n");
    Partition padded = mu;
    for (int i = 0; i < n - k; ++i) padded.push_back(1);
    std::sort(padded.rbegin(), padded.rend());

    auto measure = central_measure_impl(omega, n);
    std::vector<Scalar> moments(r, Scalar(0));
    for (const auto& [lambda, mass] : measure) {
        Scalar x = Scalar(character_value(lambda, padded)) / Scalar(partition_dimension(lambda));
        Scalar xp = x;
        for (int m = 0; m < r; ++m) {
            moments[m] = moments[m] + mass * xp;
            xp = xp * x;
        }
    }
    std::vector<Scalar> kappa(r);
    kappa[0] = moments[0];
    if (r >= 2) kappa[1] = moments[1] - moments[0] * moments[0];
    if (r >= 3)
        kappa[2] = moments[2] - Scalar(3) * moments[1] * moments[0] +
                   Scalar(2) * moments[0] * moments[0] * moments[0];
    return kappa;
}

} // namespace

double power_sum(const ThomaParameter& omega, int k) { return power_sum_impl(omega, k); }
Rational power_sum(const ThomaParameterQ& omega, int k) { return power_sum_impl(omega, k); }

double tau_omega(const ThomaParameter& omega, const Partition& ct) { return tau_impl(omega, ct); }
Rational tau_omega(const ThomaParameterQ& omega, const Partition& ct) {
    return tau_impl(omega, ct);
}

std::map<Partition, double> central_measure(const ThomaParameter& omega, int n) {
    auto m = central_measure_impl(omega, n);
    double total = 0;
    for (auto& [lam, mass] : m) {
        if (mass < -1e-12) throw not_positive_error("negative central-measure mass");
        total += mass;
    }
    if (std::fabs(total - 1.0) > 1e-10)
        throw numeric_error("central measure does not sum to 1");
    return m;
}

std::map<Partition, Rational> central_measure(const ThomaParameterQ& omega, int n) {
    return central_measure_impl(omega, n);
}

std::vector<double> char_cumulants_exact(const ThomaParameter& omega, const Partition& mu, int n,
                                         int r) {
    return char_cumulants_impl(omega, mu, n, r);
}
std::vector<Rational> char_cumulants_exact(const ThomaParameterQ& omega, const Partition& mu,
                                           int n, int r) {
    return char_cumulants_impl(omega, mu, n, r);
}

CharLimits sigma2_L_char(const ThomaParameter& omega, int k) {
    if (k < 2) throw validation_error("sigma2_L_char needs k >= 2");
    double pk = power_sum(omega, k);
    double p2k = power_sum(omega, 2 * k - 1);
    double p3k = power_sum(omega, 3 * k - 2);
    CharLimits out;
    out.sigma2 = (double)k * k * (p2k - pk * pk);
    out.L = (double)k * k * k *
            ((3.0 * k - 2) * p3k - (6.0 * k - 3) * p2k * pk + (3.0 * k - 1) * pk * pk * pk);
    out.degenerate = out.sigma2 <= 1e-14;
    return out;
}

CharLimits general_mu_limits(const ThomaParameter& omega, const Partition& mu) {
    int size = 0;
    for (int v : mu) size += v;
    if (size > 12) throw too_large_error("general_mu_limits capped at |mu| = 12");
    int l = (int)mu.size();
    auto p = [&](int k) { return power_sum(omega, k); };
    double p_mu = 1;
    for (int v : mu) p_mu *= p(v);

    // relative join factors P_ij = p_{mu_i + mu_j - 1} / (p_{mu_i} p_{mu_j})
    auto P2 = [&](int i, int j) { return p(mu[i] + mu[j] - 1) / (p(mu[i]) * p(mu[j])); };
    auto P3 = [&](int i, int j, int k) {
        return p(mu[i] + mu[j] + mu[k] - 2) / (p(mu[i]) * p(mu[j]) * p(mu[k]));
    };

    CharLimits out;
    // limit of n kappa^2: p_mu^2 sum_ij mu_i mu_j (P_ij - 1)
    double s2 = 0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) s2 += mu[i] * mu[j] * (P2(i, j) - 1.0);
    out.sigma2 = p_mu * p_mu * s2;

    // limit of n^2 kappa^3 for nu = delta = mu
    double t1 = 0, t2 = 0, t3 = 0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                t1 += (double)mu[i] * mu[j] * mu[j] * mu[k] *
                      (1.0 + P3(i, j, k) - P2(i, j) - P2(j, k));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                if (j == k) continue;
                for (int m = 0; m < l; ++m)
                    t2 += (double)mu[i] * mu[j] * mu[k] * mu[m] * (1.0 - P2(i, j)) *
                          (1.0 - P2(k, m));
            }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                t3 += (double)mu[i] * mu[j] * mu[k] * (3.0 * P2(i, j) - 2.0 * P3(i, j, k) - 1.0);
    double pm3 = p_mu * p_mu * p_mu;
    out.L = 3.0 * pm3 * (t1 + t2) + pm3 * t3;
    out.degenerate = out.sigma2 <= 1e-14;
    return out;
}

} // namespace modphi
