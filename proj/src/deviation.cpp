#include "modphi/deviation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modphi/errors.hpp"
#include "modphi/special.hpp"

namespace modphi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_upper_range(const ModPhiModel& model, double x) {
    double m0 = model.law.eta_d1(0.0);
    if (!(x > m0))
        throw out_of_range_error("x must exceed eta'(0) for an upper-tail estimate");
}

DeviationEstimate make_estimate(Regime r, double rate, double leading, double correction,
                                bool boundary = false) {
    DeviationEstimate e;
    e.regime = r;
    e.exponent_rate = rate;
    e.leading = leading;
    e.correction = correction;
    e.log_prob = -rate + std::log(leading * correction);
    e.boundary_flag = boundary;
    return e;
}

} // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::lattice_point: return "lattice_point";
        case Regime::lattice_tail: return "lattice_tail";
        case Regime::nonlattice_tail: return "nonlattice_tail";
        case Regime::clt: return "clt";
        case Regime::crossover: return "crossover";
        case Regime::cumulant_moderate: return "cumulant_moderate";
    }
    return "?";
}

double DeviationEstimate::prob() const { return std::exp(log_prob); }

DeviationEstimate lattice_point_mass(const ModPhiModel& model, double x, int order) {
    if (!model.law.lattice || model.law.lattice_span != 1.0)
        throw not_lattice_error("lattice_point_mass needs a span-1 lattice law");
    double k = model.t_n * x;
    if (std::fabs(k - std::round(k)) > 1e-9)
        throw validation_error("t_n * x must be an integer for a lattice point mass");
    if (order != 0 && order != 1) throw unsupported_order_error("order must be 0 or 1");

    LegendrePoint lp = solve_saddle(model.law, x);
    double epp = model.law.eta_d2(lp.h);
    double psi_h = model.psi_real(lp.h);
    double leading = psi_h / std::sqrt(kTwoPi * model.t_n * epp);
    double correction = 1.0;
    if (order == 1) {
        double e3 = model.law.eta_d3(lp.h);
        double e4 = model.law.eta_d4(lp.h);
        double p1 = model.psi_deriv1(lp.h);
        double p2 = model.psi_deriv2(lp.h);
        double a1 = -0.5 * p2 / epp + (psi_h * e4 + 4.0 * p1 * e3) / (24.0 * epp * epp) -
                    15.0 * psi_h * e3 * e3 / (72.0 * epp * epp * epp);
        correction = 1.0 + a1 / (model.t_n * psi_h);
    }
    return make_estimate(Regime::lattice_point, model.t_n * lp.F, leading, correction);
}

DeviationEstimate lattice_tail(const ModPhiModel& model, double x) {
    if (!model.law.lattice || model.law.lattice_span != 1.0)
        throw not_lattice_error("lattice_tail needs a span-1 lattice law");
    require_upper_range(model, x);

    LegendrePoint lp = solve_saddle(model.law, x);
    double epp = model.law.eta_d2(lp.h);
    double psi_h = model.psi_real(lp.h);
    double leading = psi_h / std::sqrt(kTwoPi * model.t_n * epp);
    double correction = 1.0 / (1.0 - std::exp(-lp.h));
    bool boundary = lp.h * std::sqrt(model.t_n * epp) < 1.0; // 1/(1-e^{-h}) blows up as h -> 0
    return make_estimate(Regime::lattice_tail, model.t_n * lp.F, leading, correction, boundary);
}

DeviationEstimate nonlattice_tail(const ModPhiModel& model, double x) {
    if (model.law.lattice) throw is_lattice_error("nonlattice_tail needs a non-lattice law");
    double m0 = model.law.eta_d1(0.0);
    if (x == m0) throw out_of_range_error("x = eta'(0) has no deviation estimate");

    LegendrePoint lp = solve_saddle(model.law, x);
    double epp = model.law.eta_d2(lp.h);
    double psi_h = model.psi_real(lp.h);
    double h = std::fabs(lp.h); // lower tail (x < eta'(0)) uses |h| by reflection
    double leading = psi_h / (h * std::sqrt(kTwoPi * model.t_n * epp));
    bool boundary = h * std::sqrt(model.t_n * epp) < 1.0;
    return make_estimate(Regime::nonlattice_tail, model.t_n * lp.F, leading, 1.0, boundary);
}

DeviationEstimate crossover_tail(const ModPhiModel& model, double y) {
    if (y < 0) throw out_of_range_error("crossover_tail needs y >= 0");
    double m0 = model.law.eta_d1(0.0);
    double v0 = model.law.eta_d2(0.0);
    double s = y * std::sqrt(v0 / model.t_n);
    double x = m0 + s;

    if (y == 0.0) {
        DeviationEstimate e = make_estimate(Regime::clt, 0.0, 0.5, 1.0);
        return e;
    }
    LegendrePoint lp = solve_saddle(model.law, x);
    double epp = model.law.eta_d2(lp.h);
    double beta = lp.h * std::sqrt(model.t_n * epp);
    double rate = model.t_n * lp.F;
    // e^{beta^2/2} P[N >= beta] evaluated in log space; it behaves like
    // 1/(beta sqrt(2 pi)) for large beta, so no overflow
    double log_factor = 0.5 * beta * beta + log_gaussian_tail(beta);
    Regime regime = (y <= std::pow(model.t_n, 1.0 / 6.0)) ? Regime::clt : Regime::crossover;
    return make_estimate(regime, rate, std::exp(log_factor), 1.0);
}

DeviationEstimate cumulant_moderate(const CumulantModel& model, double T, bool lower_tail) {
    if (model.sigma2 <= 0) throw non_positive_variance_error("sigma^2 must be positive");
    if (T <= 0) throw out_of_range_error("cumulant_moderate needs T > 0");
    double alpha = model.alpha_n;
    double L = lower_tail ? -model.L : model.L;
    double rate = T * T / (2.0 * alpha);
    double leading = 1.0 / std::sqrt(kTwoPi * T * T / alpha);
    double sigma3 = std::pow(model.sigma2, 1.5);
    double correction = std::exp(L * T * T * T / (6.0 * sigma3 * alpha * alpha));
    // the displayed window is sqrt(alpha) <= T << alpha^{3/4}; outside it we
    // only flag the estimate
    bool boundary = (T < std::sqrt(alpha)) || (T > std::pow(alpha, 0.75));
    return make_estimate(Regime::cumulant_moderate, rate, leading, correction, boundary);
}

std::vector<double> petrov_coefficients(const std::vector<double>& kappas, int v) {
    if (v < 2 || v > 4) throw unsupported_order_error("petrov_coefficients supports 2 <= v <= 4");
    if ((int)kappas.size() < v - 1)
        throw validation_error("kappas must supply kappa^(2..v)");
    double k2 = kappas[0];
    double k3 = v >= 3 ? kappas[1] : 0.0;
    double k4 = v >= 4 ? kappas[2] : 0.0;
    (void)k2;
    std::vector<double> lambda;
    lambda.push_back(-0.5);                              // lambda^(2)
    if (v >= 3) lambda.push_back(k3 / 6.0);              // lambda^(3)
    if (v >= 4) lambda.push_back((k4 - 3 * k3 * k3) / 24.0); // lambda^(4)
    return lambda;
}

double berry_esseen_cdf(const ModPhiModel& model, double x) {
    double v0 = model.law.eta_d2(0.0);
    double e3 = model.law.eta_d3(0.0);
    double p1 = model.psi_deriv1(0.0);
    double g = std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
    double phi = 1.0 - gaussian_tail(x);
    // int_{-inf}^x y g = -g(x);  int_{-inf}^x (y^3-3y) g = (1-x^2) g(x)
    return phi - p1 / std::sqrt(model.t_n * v0) * g +
           e3 / (6.0 * std::sqrt(model.t_n * v0 * v0 * v0)) * (1.0 - x * x) * g;
}

BorelBound borel_bound(const ModPhiModel& model, const std::vector<Interval>& B) {
    if (B.empty()) throw validation_error("borel_bound needs a nonempty set");
    for (const auto& iv : B)
        if (!(iv.lo <= iv.hi)) throw validation_error("interval with lo > hi");

    double m0 = model.law.eta_d1(0.0);
    const double c = model.law.strip_halfwidth;
    // admissibility: F is finite on the image of eta' over the strip
    double xmin = std::isfinite(c) ? model.law.eta_d1(-c * (1 - 1e-9)) : -kInf;
    double xmax = std::isfinite(c) ? model.law.eta_d1(c * (1 - 1e-9)) : kInf;
    if (model.law.name == "poisson") xmin = 0.0; // F = +inf off the support side

    bool contains_mean = false;
    double left_cand = -kInf;  // sup of B cap (-inf, m0]
    double right_cand = kInf;  // inf of B cap [m0, +inf)
    for (const auto& iv : B) {
        if (iv.lo <= m0 && m0 <= iv.hi) contains_mean = true;
        if (iv.lo <= m0) left_cand = std::max(left_cand, std::min(iv.hi, m0));
        if (iv.hi >= m0) right_cand = std::min(right_cand, std::max(iv.lo, m0));
    }

    BorelBound out;
    out.lower_bound_tight = false;
    if (contains_mean) {
        out.rate = 0.0;
        out.attained = {m0};
        out.constant = kInf;
        out.log_prob_bound = 0.0; // trivial bound P <= 1
        return out;
    }

    double Fl = kInf, Fr = kInf;
    if (left_cand > xmin && std::isfinite(left_cand)) Fl = solve_saddle(model.law, left_cand).F;
    if (right_cand < xmax && std::isfinite(right_cand)) Fr = solve_saddle(model.law, right_cand).F;
    if (!std::isfinite(Fl) && !std::isfinite(Fr))
        throw not_admissible_error("F is infinite on the whole set");

    double Fb = std::min(Fl, Fr);
    out.rate = Fb;
    auto prefactor = [&](double a) {
        LegendrePoint lp = solve_saddle(model.law, a);
        double epp = model.law.eta_d2(lp.h);
        double psi_h = model.psi_real(lp.h);
        double denom = model.law.lattice ? (1.0 - std::exp(-std::fabs(lp.h)))
                                         : std::fabs(lp.h);
        return psi_h / (denom * std::sqrt(epp));
    };

    out.constant = 0.0;
    const double tie = 1e-12 * std::max(1.0, Fb);
    if (std::isfinite(Fl) && Fl <= Fb + tie) {
        out.attained.push_back(left_cand);
        out.constant += prefactor(left_cand);
    }
    if (std::isfinite(Fr) && Fr <= Fb + tie) {
        out.attained.push_back(right_cand);
        out.constant += prefactor(right_cand);
    }
    out.log_prob_bound =
        -model.t_n * Fb + std::log(out.constant) - 0.5 * std::log(kTwoPi * model.t_n);

    // tightness probe: the estimate is attained when B contains a small
    // one-sided neighborhood of each minimizer
    auto contains = [&B](double lo, double hi) {
        for (const auto& iv : B)
            if (iv.lo <= lo && hi <= iv.hi) return true;
        return false;
    };
    out.lower_bound_tight = true;
    for (double a : out.attained) {
        double delta = 1e-3 * std::fabs(a);
        if (delta == 0) delta = 1e-6;
        bool ok = (a >= m0) ? contains(a, a + delta) : contains(a - delta, a);
        if (!ok) out.lower_bound_tight = false;
    }
    return out;
}

} // namespace modphi
