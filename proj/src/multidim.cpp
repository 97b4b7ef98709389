#include "modphi/multidim.hpp"

#include <cmath>

#include "modphi/errors.hpp"
#include "modphi/parallel.hpp"
#include "modphi/rng.hpp"

namespace modphi {

namespace {

// 2x2 inverse, row-major
void invert2(const std::vector<double>& A, std::vector<double>& inv) {
    double det = A[0] * A[3] - A[1] * A[2];
    if (std::fabs(det) < 1e-300) throw domain_error("singular scaling matrix");
    inv = {A[3] / det, -A[1] / det, -A[2] / det, A[0] / det};
}

double simpson_refine(const std::function<double(double)>& f, double a, double b) {
    // composite Simpson, doubling panels until the relative change < 1e-6
    int n = 16;
    auto eval = [&](int panels) {
        double h = (b - a) / panels;
        double s = f(a) + f(b);
        for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    double prev = eval(n);
    for (int it = 0; it < 14; ++it) {
        n *= 2;
        double cur = eval(n);
        if (std::fabs(cur - prev) <= 1e-6 * std::max(1e-300, std::fabs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace

double conic_surface_integral(const MultiModGaussianModel& model, const ConicSector& sector) {
    int d = sector.dimension;
    double b = sector.b;
    if (b <= 0) throw validation_error("sector radius must be positive");

    if (d == 1) {
        // counting measure on {-b, +b}
        double s = 0;
        for (double x : {-b, b}) {
            std::vector<double> pt = {x};
            if (!sector.on_sphere || sector.on_sphere({x / b})) s += model.psi(pt);
        }
        if (s == 0) throw degenerate_error("sector has zero surface measure");
        return s;
    }
    if (d == 2) {
        if (!(sector.theta2 > sector.theta1) || sector.theta2 - sector.theta1 > kTwoPi + 1e-12)
            throw validation_error("angular interval must satisfy 0 < theta2 - theta1 <= 2 pi");
        std::vector<double> inv;
        bool ident = model.A == std::vector<double>{1, 0, 0, 1} || model.A.empty();
        if (!ident) invert2(model.A, inv);
        auto integrand = [&](double th) {
            double u0 = b * std::cos(th), u1 = b * std::sin(th);
            std::vector<double> x = ident ? std::vector<double>{u0, u1}
                                          : std::vector<double>{inv[0] * u0 + inv[1] * u1,
                                                                inv[2] * u0 + inv[3] * u1};
            return model.psi(x);
        };
        // surface measure is the pushforward of b dtheta (same total mass)
        return b * simpson_refine(integrand, sector.theta1, sector.theta2);
    }
    if (d == 3) {
        if (!sector.on_sphere) throw validation_error("d = 3 sectors need an indicator");
        // product rule in (theta, phi); measure b^2 sin(theta) dtheta dphi
        auto outer = [&](double th) {
            auto inner = [&](double ph) {
                std::vector<double> u = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                         std::cos(th)};
                if (!sector.on_sphere(u)) return 0.0;
                std::vector<double> x = {b * u[0], b * u[1], b * u[2]};
                return model.psi(x);
            };
            return std::sin(th) * simpson_refine(inner, 0.0, kTwoPi);
        };
        double v = b * b * simpson_refine(outer, 0.0, kPi);
        if (v == 0) throw degenerate_error("sector has zero surface measure");
        return v;
    }
    throw too_large_error("conic sectors implemented for d <= 3");
}

DeviationEstimate conic_probability(const MultiModGaussianModel& model, const ConicSector& sector) {
    double integral = conic_surface_integral(model, sector) / (model.t_n * sector.b);
    int d = sector.dimension;
    double rate = 0.5 * model.t_n * sector.b * sector.b;
    double leading = std::pow(model.t_n / kTwoPi, d / 2.0) * integral;
    DeviationEstimate e;
    e.regime = Regime::nonlattice_tail;
    e.exponent_rate = rate;
    e.leading = leading;
    e.correction = 1.0;
    e.log_prob = -rate + std::log(leading);
    e.boundary_flag = false;
    return e;
}

double walk2d_angle_density(double r, double theta) {
    if (r <= 0) throw validation_error("walk2d_angle_density needs r > 0");
    double r4 = r * r * r * r;
    auto f = [r4](double th) {
        double s = std::sin(2 * th);
        return std::exp(-r4 * s * s / 96.0);
    };
    double norm = simpson_refine(f, 0.0, kTwoPi);
    return f(theta) / norm;
}

std::vector<double> walk2d_density_bins(double r, int bins) {
    std::vector<double> out(bins);
    double r4 = r * r * r * r;
    auto f = [r4](double th) {
        double s = std::sin(2 * th);
        return std::exp(-r4 * s * s / 96.0);
    };
    double total = 0;
    for (int i = 0; i < bins; ++i) {
        double a = kTwoPi * i / bins, b = kTwoPi * (i + 1) / bins;
        out[i] = simpson_refine(f, a, b);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

double dwalk_kurtosis_psi(int d, const std::vector<double>& z) {
    if (d < 2) throw validation_error("dwalk_kurtosis_psi needs d >= 2");
    if ((int)z.size() != d) throw validation_error("z has wrong dimension");
    // kappa4(iiii) = 1/d - 3/d^2, kappa4(iijj) = -1/d^2 for the step of the
    // simple walk on Z^d; psi = exp(kappa4(z^{x4})/24)
    double sum4 = 0, sum22 = 0;
    for (int i = 0; i < d; ++i) {
        sum4 += z[i] * z[i] * z[i] * z[i];
        for (int j = i + 1; j < d; ++j) sum22 += z[i] * z[i] * z[j] * z[j];
    }
    double dd = (double)d;
    double expo = ((1.0 / dd - 3.0 / (dd * dd)) * sum4 - 6.0 / (dd * dd) * sum22) / 24.0;
    return std::exp(expo);
}

WalkHistogram walk2d_conditional_mc(int n_steps, double r, std::int64_t trials,
                                    std::uint64_t seed, int bins, bool parallel,
                                    std::int64_t budget) {
    if (n_steps < 100) throw validation_error("walk2d_conditional_mc needs n >= 100");
    if (bins < 1 || trials < 1) throw validation_error("bins and trials must be positive");
    if ((double)trials * n_steps > (double)budget)
        throw budget_exceeded_error("trials * n exceeds the sampling budget");

    double threshold = r * std::pow((double)n_steps, 0.75);
    double thr2 = threshold * threshold;

    struct Partial {
        std::vector<std::int64_t> counts;
        std::int64_t accepted = 0;
    };
    const std::int64_t chunk = 4096;
    Partial init;
    init.counts.assign(bins, 0);

    Partial total = chunked_reduce<Partial>(
        trials, chunk, init,
        [&](std::int64_t chunk_idx, std::int64_t lo, std::int64_t hi) {
            Partial p;
            p.counts.assign(bins, 0);
            CounterRng rng(seed, (std::uint64_t)chunk_idx);
            for (std::int64_t t = lo; t < hi; ++t) {
                std::int64_t x = 0, y = 0;
                int k = 0;
                std::uint64_t word = 0;
                for (int s = 0; s < n_steps; ++s) {
                    if (k == 0) {
                        word = rng.next_u64();
                        k = 32;
                    }
                    switch (word & 3u) {
                        case 0: ++x; break;
                        case 1: --x; break;
                        case 2: ++y; break;
                        default: --y; break;
                    }
                    word >>= 2;
                    --k;
                }
                double norm2 = (double)x * x + (double)y * y;
                if (norm2 >= thr2 && norm2 > 0) { // the origin carries no angle
                    int b;
                    if (bins % 4 == 0 && (x == 0 || y == 0)) {
                        // axis points sit exactly on bin boundaries when 4 | bins;
                        // classify them exactly so the lattice symmetry survives
                        b = (x > 0) ? 0 : (y > 0 ? bins / 4 : (x < 0 ? bins / 2 : 3 * bins / 4));
                    } else {
                        double th = std::atan2((double)y, (double)x);
                        if (th < 0) th += kTwoPi;
                        b = std::min(bins - 1, (int)(th / kTwoPi * bins));
                    }
                    ++p.counts[b];
                    ++p.accepted;
                }
            }
            return p;
        },
        [bins](Partial acc, const Partial& p) {
            for (int i = 0; i < bins; ++i) acc.counts[i] += p.counts[i];
            acc.accepted += p.accepted;
            return acc;
        },
        parallel);

    if (r > 0 && total.accepted == 0)
        throw zero_acceptance_error("no samples passed the radial threshold");

    WalkHistogram h;
    h.counts = std::move(total.counts);
    h.accepted = total.accepted;
    h.trials = trials;
    return h;
}

} // namespace modphi
