#include "modphi/reference_law.hpp"

#include <cmath>

#include "modphi/errors.hpp"

namespace modphi {

namespace {

std::function<double(double)> fd_derivative(
    const std::function<std::complex<double>(std::complex<double>)>& f, int order) {
    return [f, order](double h) {
        // 4th-order central stencils; the step grows with the derivative order
        // to keep the s^order divisor away from roundoff
        double base = (order <= 2) ? 1e-4 : (order == 3 ? 5e-3 : 2e-2);
        double s = base * (1.0 + std::fabs(h));
        auto v = [&](double t) { return f(std::complex<double>(t, 0)).real(); };
        switch (order) {
            case 1:
                return (-v(h + 2 * s) + 8 * v(h + s) - 8 * v(h - s) + v(h - 2 * s)) / (12 * s);
            case 2:
                return (-v(h + 2 * s) + 16 * v(h + s) - 30 * v(h) + 16 * v(h - s) -
                        v(h - 2 * s)) /
                       (12 * s * s);
            case 3:
                return (-v(h + 3 * s) + 8 * v(h + 2 * s) - 13 * v(h + s) + 13 * v(h - s) -
                        8 * v(h - 2 * s) + v(h - 3 * s)) /
                       (8 * s * s * s);
            default:
                return (-v(h + 3 * s) + 12 * v(h + 2 * s) - 39 * v(h + s) + 56 * v(h) -
                        39 * v(h - s) + 12 * v(h - 2 * s) - v(h - 3 * s)) /
                       (6 * s * s * s * s);
        }
    };
}

} // namespace

ReferenceLaw gaussian_law(double mean, double variance) {
    if (variance <= 0) throw domain_error("gaussian_law requires positive variance");
    ReferenceLaw law;
    law.name = "gaussian";
    law.eta = [mean, variance](std::complex<double> z) { return mean * z + 0.5 * variance * z * z; };
    law.eta_d1 = [mean, variance](double h) { return mean + variance * h; };
    law.eta_d2 = [variance](double) { return variance; };
    law.eta_d3 = [](double) { return 0.0; };
    law.eta_d4 = [](double) { return 0.0; };
    law.lattice = false;
    return law;
}

ReferenceLaw poisson_law(double lambda) {
    if (lambda <= 0) throw domain_error("poisson_law requires positive lambda");
    ReferenceLaw law;
    law.name = "poisson";
    law.eta = [lambda](std::complex<double> z) { return lambda * (std::exp(z) - 1.0); };
    law.eta_d1 = [lambda](double h) { return lambda * std::exp(h); };
    law.eta_d2 = law.eta_d1;
    law.eta_d3 = law.eta_d1;
    law.eta_d4 = law.eta_d1;
    law.lattice = true;
    law.lattice_span = 1.0;
    return law;
}

ReferenceLaw bernoulli_law(double q) {
    if (q <= 0 || q >= 1) throw domain_error("bernoulli_law requires 0 < q < 1");
    ReferenceLaw law;
    law.name = "bernoulli";
    law.eta = [q](std::complex<double> z) { return std::log(1.0 - q + q * std::exp(z)); };
    law.eta_d1 = [q](double h) {
        double e = q * std::exp(h);
        return e / (1.0 - q + e);
    };
    law.eta_d2 = [q](double h) {
        double e = q * std::exp(h);
        double m = e / (1.0 - q + e);
        return m * (1.0 - m);
    };
    law.eta_d3 = [law](double h) {
        double m = law.eta_d1(h), v = law.eta_d2(h);
        return v * (1.0 - 2.0 * m);
    };
    law.eta_d4 = [law](double h) {
        double v = law.eta_d2(h);
        return v * (1.0 - 6.0 * v);
    };
    law.lattice = true;
    law.lattice_span = 1.0;
    return law;
}

ReferenceLaw exponential_law() {
    ReferenceLaw law;
    law.name = "exponential";
    law.eta = [](std::complex<double> z) { return -std::log(1.0 - z); };
    law.eta_d1 = [](double h) { return 1.0 / (1.0 - h); };
    law.eta_d2 = [](double h) { return 1.0 / ((1.0 - h) * (1.0 - h)); };
    law.eta_d3 = [](double h) { return 2.0 / std::pow(1.0 - h, 3); };
    law.eta_d4 = [](double h) { return 6.0 / std::pow(1.0 - h, 4); };
    law.strip_halfwidth = 1.0;
    law.lattice = false;
    return law;
}

ReferenceLaw custom_law(std::function<std::complex<double>(std::complex<double>)> eta,
                        double strip_halfwidth, bool lattice, double lattice_span) {
    ReferenceLaw law;
    law.name = "custom";
    law.eta = std::move(eta);
    law.eta_d1 = fd_derivative(law.eta, 1);
    law.eta_d2 = fd_derivative(law.eta, 2);
    law.eta_d3 = fd_derivative(law.eta, 3);
    law.eta_d4 = fd_derivative(law.eta, 4);
    law.strip_halfwidth = strip_halfwidth;
    law.lattice = lattice;
    law.lattice_span = lattice_span;
    return law;
}

ReferenceLaw law_from_terms(const std::vector<EtaTerm>& terms, double strip_halfwidth,
                            bool lattice, double lattice_span) {
    auto eval = [terms](std::complex<double> z) {
        std::complex<double> s = 0.0;
        for (const auto& t : terms) {
            std::complex<double> zp = 1.0;
            for (int i = 0; i < t.zpow; ++i) zp *= z;
            s += t.coeff * zp * std::exp(t.expmult * z);
        }
        return s;
    };
    if (std::abs(eval(0.0)) > 1e-12)
        throw validation_error("custom eta must satisfy eta(0) = 0");
    // d/dz [z^a e^(bz)] = a z^(a-1) e^(bz) + b z^a e^(bz): differentiate termwise
    auto deriv_terms = [](std::vector<EtaTerm> ts) {
        std::vector<EtaTerm> out;
        for (const auto& t : ts) {
            if (t.zpow > 0) out.push_back({t.coeff * t.zpow, t.zpow - 1, t.expmult});
            if (t.expmult != 0.0) out.push_back({t.coeff * t.expmult, t.zpow, t.expmult});
        }
        return out;
    };
    auto real_eval = [](const std::vector<EtaTerm>& ts) {
        return [ts](double h) {
            double s = 0;
            for (const auto& t : ts) s += t.coeff * std::pow(h, t.zpow) * std::exp(t.expmult * h);
            return s;
        };
    };
    auto d1 = deriv_terms(terms);
    auto d2 = deriv_terms(d1);
    auto d3 = deriv_terms(d2);
    auto d4 = deriv_terms(d3);

    ReferenceLaw law;
    law.name = "custom";
    law.eta = eval;
    law.eta_d1 = real_eval(d1);
    law.eta_d2 = real_eval(d2);
    law.eta_d3 = real_eval(d3);
    law.eta_d4 = real_eval(d4);
    law.strip_halfwidth = strip_halfwidth;
    law.lattice = lattice;
    law.lattice_span = lattice_span;
    return law;
}

LegendrePoint solve_saddle(const ReferenceLaw& law, double x) {
    const double c = law.strip_halfwidth;
    const double tol = 1e-12 * std::max(1.0, std::fabs(x));
    const bool finite_strip = std::isfinite(c);
    // largest usable |h|; stay off the strip boundary
    const double hmax = finite_strip ? c * (1.0 - 1e-9) : 700.0;

    double m0 = law.eta_d1(0.0);
    double lo = 0.0, hi = 0.0;
    if (std::fabs(m0 - x) <= tol) {
        double epp = law.eta_d2(0.0);
        return {x, 0.0, 0.0, 0.0, 1.0 / epp};
    }
    // grow a bracket geometrically from h = 0; eta' is strictly increasing
    double step = 1e-3;
    if (x > m0) {
        hi = step;
        while (law.eta_d1(hi) < x) {
            lo = hi;
            hi = std::min(hi * 2.0, hmax);
            if (hi == lo) throw out_of_range_error("x outside the image of eta' on the strip");
        }
    } else {
        lo = -step;
        while (law.eta_d1(lo) > x) {
            hi = lo;
            lo = std::max(lo * 2.0, -hmax);
            if (lo == hi) throw out_of_range_error("x outside the image of eta' on the strip");
        }
    }

    double h = 0.5 * (lo + hi);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        double g = law.eta_d1(h) - x;
        if (std::fabs(g) <= tol) {
            converged = true;
            break;
        }
        if (g > 0)
            hi = h;
        else
            lo = h;
        double gp = law.eta_d2(h);
        double hn = h - g / gp;
        if (!(hn > lo && hn < hi)) hn = 0.5 * (lo + hi); // bisection fallback
        h = hn;
    }
    if (!converged && std::fabs(law.eta_d1(h) - x) > tol)
        throw non_convergence_error("saddle solver did not reach tolerance");

    double epp = law.eta_d2(h);
    if (epp <= 0) throw non_convergence_error("eta'' not positive at the saddle");
    double F = x * h - law.eta_real(h);
    if (F < 0 && F > -1e-12) F = 0; // clip roundoff at the minimum
    return {x, h, F, h, 1.0 / epp};
}

std::vector<LegendrePoint> legendre_grid(const ReferenceLaw& law, const std::vector<double>& xs) {
    std::vector<LegendrePoint> out;
    out.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        try {
            out.push_back(solve_saddle(law, xs[i]));
        } catch (const out_of_range_error& e) {
            throw out_of_range_error("x[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

} // namespace modphi
