#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pcv/error.hpp"

namespace pcv {

// Deterministic trial-division primality; moduli here are small (tens, at
// most a few thousand), so nothing fancier is warranted.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue mod a prime ell, canonical representative in [0, ell). The modulus
// rides along with each value; mixing moduli is a RingMismatch. Moduli must
// stay below 2^31 so products fit in uint64 without reduction tricks.
class ModResidue {
public:
    ModResidue(std::uint64_t value, std::uint64_t modulus) : m_(modulus) {
        if (modulus < 2 || modulus >= (std::uint64_t{1} << 31))
            raise(errc::invalid_argument, "modulus out of range");
        v_ = value % m_;
    }

    static ModResidue of(long value, std::uint64_t modulus) {
        ModResidue r(0, modulus);
        long red = value % static_cast<long>(modulus);
        if (red < 0) red += static_cast<long>(modulus);
        r.v_ = static_cast<std::uint64_t>(red);
        return r;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return m_; }

    ModResidue zero_like() const { return ModResidue(0, m_); }
    ModResidue one_like() const { return ModResidue(1, m_); }
    ModResidue of_long(long n) const { return of(n, m_); }

    // Image of a canonical rational under Z_(ell) -> F_ell; rejects
    // denominators divisible by ell.
    ModResidue of_rational(const mpq_class& q) const {
        std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), m_);
        std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), m_);
        if (den == 0)
            raise(errc::not_ell_integral,
                  "denominator divisible by " + std::to_string(m_));
        return ModResidue(num, m_) * ModResidue(den, m_).inv();
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    ModResidue pow(std::uint64_t e) const {
        ModResidue acc(1, m_);
        ModResidue base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Fermat inversion a^(ell-2); deterministic by construction.
    ModResidue inv() const {
        if (v_ == 0) raise(errc::non_unit, "inverse of 0 mod " + std::to_string(m_));
        return pow(m_ - 2);
    }

    ModResidue operator-() const { return ModResidue(v_ == 0 ? 0 : m_ - v_, m_); }
    ModResidue operator+(const ModResidue& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= m_) s -= m_;
        return ModResidue(s, m_);
    }
    ModResidue operator-(const ModResidue& o) const { return *this + (-o); }
    ModResidue operator*(const ModResidue& o) const {
        check(o);
        return ModResidue((v_ * o.v_) % m_, m_);
    }

    ModResidue& operator+=(const ModResidue& o) { return *this = *this + o; }
    ModResidue& operator-=(const ModResidue& o) { return *this = *this - o; }
    ModResidue& operator*=(const ModResidue& o) { return *this = *this * o; }

    void fma(const ModResidue& a, const ModResidue& b) {
        a.check(b);
        check(a);
        v_ = (v_ + a.v_ * b.v_) % m_;
    }

    bool operator==(const ModResidue& o) const { return m_ == o.m_ && v_ == o.v_; }
    bool operator!=(const ModResidue& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const ModResidue& o) const {
        if (m_ != o.m_)
            raise(errc::ring_mismatch, "moduli " + std::to_string(m_) + " vs " +
                                           std::to_string(o.m_));
    }

    std::uint64_t v_;
    std::uint64_t m_;
};

}  // namespace pcv
