#pragma once

#include <gmpxx.h>

#include <string>

#include "pcv/error.hpp"

namespace pcv {

// Exact rational coefficient over GMP. Values are always in lowest terms
// with positive denominator (mpq canonical form), so exact equality is
// representation equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) raise(errc::invalid_argument, "rational with zero denominator");
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) raise(errc::invalid_argument, "rational with zero denominator");
        v_ = mpq_class(num);
        v_ /= mpq_class(den);
    }

    // Ring-instance helpers; the ring carries no runtime state, the instance
    // methods exist so templated series code works uniformly with ModResidue.
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational of_long(long n) const { return Rational(n); }
    Rational of_rational(const mpq_class& q) const { return Rational(mpq_class(q)); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inv() const {
        if (is_zero()) raise(errc::non_unit, "inverse of 0");
        return Rational(1 / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    // *this += a*b, the convolution workhorse.
    void fma(const Rational& a, const Rational& b) {
        mpq_class t(a.v_ * b.v_);
        v_ += t;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // Canonical form: "n" for integers, "n/d" otherwise, no whitespace.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

}  // namespace pcv
