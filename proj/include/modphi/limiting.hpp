#ifndef MODPHI_LIMITING_HPP
#define MODPHI_LIMITING_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "modphi/special.hpp"

namespace modphi {

// The residue psi of the renormalized mgf limit. All kinds satisfy psi(0) = 1
// and do not vanish on the real segment where they get evaluated.
class LimitingFunction {
  public:
    using Evaluator = std::function<std::complex<double>(std::complex<double>)>;

    // psi == 1
    static LimitingFunction one();
    // exp(L z^v / v!)
    static LimitingFunction exp_monomial(double L, int v);
    // 1 / Gamma(e^z)   (cycle counts of uniform random permutations)
    static LimitingFunction inv_gamma_exp();
    // Gamma(theta) / Gamma(theta e^w)   (weighted permutation measures)
    static LimitingFunction gamma_ratio(double theta);
    // G(a) / G(a + x) with Barnes G; a = 3/2 (USp) or 1/2 (SO)
    static LimitingFunction barnes_ratio(double a);
    // G(1 + x/2)^2 / G(1 + x): real restriction of the unitary-group residue
    static LimitingFunction barnes_cue_real();
    // truncated prod (1 + x/a) e^{-x/a} over integers or primes up to K
    static LimitingFunction weierstrass(IndexSet set, std::uint32_t K);
    static LimitingFunction custom(std::string name, Evaluator f);

    std::complex<double> operator()(std::complex<double> z) const { return eval_(z); }
    double real(double x) const { return eval_(std::complex<double>(x, 0)).real(); }

    // psi' and psi'' at a real point, central differences unless the kind has
    // a closed form registered.
    double d1(double x) const;
    double d2(double x) const;

    const std::string& kind() const { return kind_; }

  private:
    LimitingFunction(std::string kind, Evaluator f) : kind_(std::move(kind)), eval_(std::move(f)) {}
    std::string kind_;
    Evaluator eval_;
    std::function<double(double)> d1_, d2_;
};

std::complex<double> eval_psi(const LimitingFunction& psi, std::complex<double> z);

} // namespace modphi

#endif
