#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcv/error.hpp"
#include "pcv/modresidue.hpp"
#include "pcv/rational.hpp"

namespace pcv {

// Formal power series known to finite order: coefficients a_0..a_{N-1} over
// an exact ring R. Every value is immutable after construction; arithmetic
// returns fresh series with precision = min of the operands (no zero
// padding — unknown coefficients stay unknown).
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) raise(errc::invalid_argument, "series needs precision >= 1");
    }

    static TruncatedSeries zero(std::size_t n, const R& like) {
        if (n == 0) raise(errc::invalid_argument, "series needs precision >= 1");
        return TruncatedSeries(std::vector<R>(n, like.zero_like()));
    }

    static TruncatedSeries constant(std::size_t n, const R& value) {
        TruncatedSeries s = zero(n, value);
        s.c_[0] = value;
        return s;
    }

    std::size_t precision() const { return c_.size(); }

    const R& coeff(std::size_t i) const {
        if (i >= c_.size())
            raise(errc::insufficient_precision,
                  "coefficient " + std::to_string(i) + " beyond precision " +
                      std::to_string(c_.size()));
        return c_[i];
    }

    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const R& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    TruncatedSeries truncated(std::size_t n) const {
        if (n == 0 || n > c_.size())
            raise(errc::insufficient_precision, "cannot truncate to " + std::to_string(n));
        return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + n));
    }

    TruncatedSeries operator-() const {
        std::vector<R> out;
        out.reserve(c_.size());
        for (const R& x : c_) out.push_back(-x);
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        std::vector<R> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.c_[i] + b.c_[i]);
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        std::vector<R> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(a.c_[i] - b.c_[i]);
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.precision(), b.precision());
        std::size_t threshold = dnc_threshold();
        if (threshold != 0 && n >= threshold) return mul_dnc(a, b, n);
        return mul_naive(a, b, n);
    }

    TruncatedSeries scaled(const R& s) const {
        std::vector<R> out;
        out.reserve(c_.size());
        for (const R& x : c_) out.push_back(x * s);
        return TruncatedSeries(std::move(out));
    }

    // Integer power by repeated squaring; precision is preserved.
    TruncatedSeries pow(unsigned long e) const {
        TruncatedSeries acc = constant(precision(), c_[0].one_like());
        TruncatedSeries base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Multiplication by q^j within the same precision window: the top j
    // known coefficients fall off the end.
    TruncatedSeries shifted_up(std::size_t j) const {
        std::vector<R> out(c_.size(), c_[0].zero_like());
        for (std::size_t i = 0; i + j < c_.size(); ++i) out[i + j] = c_[i];
        return TruncatedSeries(std::move(out));
    }

    // D = q d/dq: a_n -> n*a_n.
    TruncatedSeries derive() const {
        std::vector<R> out;
        out.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.push_back(c_[i] * c_[i].of_long(static_cast<long>(i)));
        return TruncatedSeries(std::move(out));
    }

    // Reciprocal to the same precision; requires a unit constant term.
    TruncatedSeries inverse() const {
        if (c_[0].is_zero())
            raise(errc::non_unit_leading_coefficient, "inverting series with a_0 = 0");
        R inv0 = c_[0].inv();
        std::vector<R> out(c_.size(), c_[0].zero_like());
        out[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            R acc = c_[0].zero_like();
            for (std::size_t k = 1; k <= n; ++k) acc.fma(c_[k], out[n - k]);
            out[n] = -(inv0 * acc);
        }
        return TruncatedSeries(std::move(out));
    }

    // Performance seam: operand size at or above the threshold switches the
    // product to a divide-and-conquer path. 0 (the default) disables it.
    static void set_dnc_threshold(std::size_t n) { dnc_threshold_ref().store(n); }
    static std::size_t dnc_threshold() { return dnc_threshold_ref().load(); }

private:
    static std::atomic<std::size_t>& dnc_threshold_ref() {
        static std::atomic<std::size_t> t{0};
        return t;
    }

    static std::size_t nonzero_count(const std::vector<R>& v, std::size_t upto) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < upto; ++i)
            if (!v[i].is_zero()) ++c;
        return c;
    }

    static TruncatedSeries mul_naive(const TruncatedSeries& a, const TruncatedSeries& b,
                                     std::size_t n) {
        // Iterate the sparser operand on the outside; eta-style factors have
        // O(sqrt N) support and this turns the convolution into O(N^1.5).
        const std::vector<R>* x = &a.c_;
        const std::vector<R>* y = &b.c_;
        if (nonzero_count(*y, n) < nonzero_count(*x, n)) std::swap(x, y);
        std::vector<R> out(n, a.c_[0].zero_like() + b.c_[0].zero_like());
        for (std::size_t i = 0; i < n; ++i) {
            const R& xi = (*x)[i];
            if (xi.is_zero()) continue;
            for (std::size_t j = 0; j + i < n; ++j) out[i + j].fma(xi, (*y)[j]);
        }
        return TruncatedSeries(std::move(out));
    }

    // Full Karatsuba product of two coefficient blocks (length la+lb-1).
    static std::vector<R> kara_full(const R* a, std::size_t la, const R* b, std::size_t lb,
                                    const R& zero) {
        if (la == 0 || lb == 0) return {};
        if (la < 16 || lb < 16) {
            std::vector<R> out(la + lb - 1, zero);
            for (std::size_t i = 0; i < la; ++i) {
                if (a[i].is_zero()) continue;
                for (std::size_t j = 0; j < lb; ++j) out[i + j].fma(a[i], b[j]);
            }
            return out;
        }
        std::size_t h = std::min(la, lb) / 2;
        // a = a0 + q^h a1, b = b0 + q^h b1
        std::vector<R> a0(a, a + h), a1(a + h, a + la);
        std::vector<R> b0(b, b + h), b1(b + h, b + lb);
        std::vector<R> z0 = kara_full(a0.data(), a0.size(), b0.data(), b0.size(), zero);
        std::vector<R> z2 = kara_full(a1.data(), a1.size(), b1.data(), b1.size(), zero);
        std::vector<R> sa(std::max(a0.size(), a1.size()), zero);
        std::vector<R> sb(std::max(b0.size(), b1.size()), zero);
        for (std::size_t i = 0; i < a0.size(); ++i) sa[i] += a0[i];
        for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
        for (std::size_t i = 0; i < b0.size(); ++i) sb[i] += b0[i];
        for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
        std::vector<R> z1 = kara_full(sa.data(), sa.size(), sb.data(), sb.size(), zero);
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<R> out(la + lb - 1, zero);
        for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
        return out;
    }

    static TruncatedSeries mul_dnc(const TruncatedSeries& a, const TruncatedSeries& b,
                                   std::size_t n) {
        R zero = a.c_[0].zero_like() + b.c_[0].zero_like();
        std::vector<R> full = kara_full(a.c_.data(), n, b.c_.data(), n, zero);
        full.resize(n, zero);
        return TruncatedSeries(std::move(full));
    }

    std::vector<R> c_;
};

// Equality is defined up to the shared precision: both series agree on the
// first min(N_a, N_b) coefficients.
template <typename R>
std::optional<std::size_t> first_mismatch(const TruncatedSeries<R>& a,
                                          const TruncatedSeries<R>& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i < n; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return std::nullopt;
}

template <typename R>
bool equal_upto_min(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return !first_mismatch(a, b).has_value();
}

// (q^t; q^t)_inf by the pentagonal number theorem: coefficient t*w(m) is
// (-1)^m, everything else 0. O(N * sqrt(N/t)) coefficient writes.
TruncatedSeries<Rational> euler_product(unsigned long t, std::size_t n);

// Coefficientwise image under Q_(ell) -> F_ell; a reduced denominator
// divisible by ell raises NotEllIntegral.
TruncatedSeries<ModResidue> reduce_mod(const TruncatedSeries<Rational>& f, std::uint64_t ell);

}  // namespace pcv
