#ifndef MODPHI_BIGNAT_HPP
#define MODPHI_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modphi/errors.hpp"

namespace modphi {

// Minimal unsigned big integer: just enough arithmetic for the exact
// factorial-scale identities in the permutation-cycle checks (n! at n = 500
// is ~1700 digits). Base 2^64 limbs, little-endian.
class BigNat {
  public:
    BigNat() = default;
    BigNat(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    friend BigNat operator+(const BigNat& a, const BigNat& b) {
        BigNat r;
        const auto &x = a.limbs_, &y = b.limbs_;
        size_t n = std::max(x.size(), y.size());
        r.limbs_.resize(n, 0);
        unsigned __int128 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            unsigned __int128 s = carry;
            if (i < x.size()) s += x[i];
            if (i < y.size()) s += y[i];
            r.limbs_[i] = (std::uint64_t)s;
            carry = s >> 64;
        }
        if (carry) r.limbs_.push_back((std::uint64_t)carry);
        return r;
    }

    BigNat& operator+=(const BigNat& o) { return *this = *this + o; }

    // requires a >= b
    friend BigNat operator-(const BigNat& a, const BigNat& b) {
        if (cmp(a, b) < 0) throw domain_error("BigNat subtraction would go negative");
        BigNat r;
        r.limbs_ = a.limbs_;
        std::uint64_t borrow = 0;
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            unsigned __int128 sub = borrow;
            if (i < b.limbs_.size()) sub += b.limbs_[i];
            if (r.limbs_[i] >= sub) {
                r.limbs_[i] -= (std::uint64_t)sub;
                borrow = 0;
            } else {
                r.limbs_[i] = (std::uint64_t)(((unsigned __int128)1 << 64) + r.limbs_[i] - sub);
                borrow = 1;
            }
        }
        r.trim();
        return r;
    }

    friend BigNat operator*(const BigNat& a, std::uint64_t m) {
        if (m == 0 || a.is_zero()) return BigNat();
        BigNat r;
        r.limbs_.resize(a.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 p = (unsigned __int128)a.limbs_[i] * m + carry;
            r.limbs_[i] = (std::uint64_t)p;
            carry = p >> 64;
        }
        if (carry) r.limbs_.push_back((std::uint64_t)carry);
        return r;
    }

    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return BigNat();
        BigNat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur = r.limbs_[i + j];
                cur += (unsigned __int128)a.limbs_[i] * b.limbs_[j] + carry;
                r.limbs_[i + j] = (std::uint64_t)cur;
                carry = cur >> 64;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                unsigned __int128 cur = (unsigned __int128)r.limbs_[k] + carry;
                r.limbs_[k] = (std::uint64_t)cur;
                carry = cur >> 64;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // exact division by a small divisor; throws if a remainder is left
    BigNat div_exact(std::uint64_t d) const {
        BigNat r;
        r.limbs_.resize(limbs_.size(), 0);
        unsigned __int128 rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            r.limbs_[i] = (std::uint64_t)(cur / d);
            rem = cur % d;
        }
        if (rem != 0) throw domain_error("BigNat::div_exact with nonzero remainder");
        r.trim();
        return r;
    }

    static int cmp(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }
    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a, b) == 0; }

    double to_double() const {
        double r = 0;
        for (size_t i = limbs_.size(); i-- > 0;) r = r * 18446744073709551616.0 + (double)limbs_[i];
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::uint64_t> tmp = limbs_;
        std::string s;
        while (!tmp.empty()) {
            unsigned __int128 rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | tmp[i];
                tmp[i] = (std::uint64_t)(cur / 10);
                rem = cur % 10;
            }
            s += char('0' + int(rem));
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        }
        return {s.rbegin(), s.rend()};
    }

  private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;
};

} // namespace modphi

#endif
