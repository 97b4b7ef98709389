#ifndef MODPHI_RNG_HPP
#define MODPHI_RNG_HPP

#include <cmath>
#include <cstdint>

namespace modphi {

// Counter-based generator: the draw at position n of stream s under seed k is a
// pure function of (k, s, n). Same seed gives the same draws no matter how the
// work is split across threads, which is the determinism contract the Monte
// Carlo kernels rely on.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream ^ 0x9e3779b97f4a7c15ull))), counter_(0) {}

    std::uint64_t next_u64() { return mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ull); }

    // uniform in [0,1) with 53 random bits
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Box-Muller; always consumes two uniforms so the stream position stays
    // a fixed function of the draw count.
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 <= 0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

} // namespace modphi

#endif
