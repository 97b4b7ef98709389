#ifndef MODPHI_SERIES_HPP
#define MODPHI_SERIES_HPP

#include <cmath>
#include <vector>

#include "modphi/errors.hpp"

namespace modphi {

// Truncated power series sum_{k <= M} c_k t^k; arithmetic is exact to the
// truncation order.
class Series {
  public:
    Series(int order, double c0 = 0.0) : c_(order + 1, 0.0) { c_[0] = c0; }
    explicit Series(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return (int)c_.size() - 1; }
    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }

    Series& operator+=(const Series& o) {
        for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
        return *this;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // multiply every coefficient by s (the substitution g -> s*g used for
    // exp(e^w g))
    Series scaled(double s) const {
        Series r = *this;
        for (double& v : r.c_) v *= s;
        return r;
    }

    // exp of a series with zero constant term: n b_n = sum_{k=1}^n k a_k b_{n-k}
    Series exp() const {
        if (c_[0] != 0.0) throw validation_error("series exp needs zero constant term");
        Series b(order());
        b.c_[0] = 1.0;
        for (int n = 1; n <= order(); ++n) {
            double s = 0;
            for (int k = 1; k <= n; ++k) s += k * c_[k] * b.c_[n - k];
            b.c_[n] = s / n;
        }
        return b;
    }

    // log of a series with constant term 1
    Series log() const {
        if (c_[0] != 1.0) throw validation_error("series log needs constant term 1");
        Series a(order());
        for (int n = 1; n <= order(); ++n) {
            double s = n * c_[n];
            for (int k = 1; k < n; ++k) s -= k * a.c_[k] * c_[n - k];
            a.c_[n] = s / n;
        }
        return a;
    }

  private:
    std::vector<double> c_;
};

} // namespace modphi

#endif
