#pragma once

#include <gmpxx.h>

#include <utility>

#include "pcv/series.hpp"

namespace pcv {

// q^c * body with an exact rational exponent offset c. This is the only
// place fractional q-exponents live; TruncatedSeries stays integer-exponent.
// eta = q^{1/24} (q;q)_inf and 1/eta = q^{-1/24} * (partition gf) are the
// inhabitants that matter.
template <typename R = Rational>
class QShiftedSeries {
public:
    QShiftedSeries(mpq_class offset, TruncatedSeries<R> body)
        : offset_(std::move(offset)), body_(std::move(body)) {
        offset_.canonicalize();
    }

    const mpq_class& offset() const { return offset_; }
    const TruncatedSeries<R>& body() const { return body_; }

    friend QShiftedSeries operator*(const QShiftedSeries& a, const QShiftedSeries& b) {
        return QShiftedSeries(mpq_class(a.offset_ + b.offset_), a.body_ * b.body_);
    }

    // D(q^c f) = q^c (c f + D f): body coefficient i picks up (c + i).
    QShiftedSeries derive() const {
        std::vector<R> out;
        out.reserve(body_.precision());
        for (std::size_t i = 0; i < body_.precision(); ++i) {
            const R& x = body_.coeff(i);
            out.push_back(x * x.of_rational(mpq_class(offset_ + static_cast<long>(i))));
        }
        return QShiftedSeries(offset_, TruncatedSeries<R>(std::move(out)));
    }

    QShiftedSeries pow(unsigned long e) const {
        return QShiftedSeries(mpq_class(offset_ * static_cast<long>(e)), body_.pow(e));
    }

    // Collapse to an integer-exponent series. Requires the offset to be a
    // non-negative integer; the shift happens inside the same precision
    // window (like shifted_up).
    TruncatedSeries<R> as_series() const {
        if (offset_.get_den() != 1 || offset_ < 0)
            raise(errc::invalid_argument,
                  "offset " + offset_.get_str() + " is not a non-negative integer");
        unsigned long j = mpz_get_ui(mpq_numref(offset_.get_mpq_t()));
        return body_.shifted_up(j);
    }

private:
    mpq_class offset_;
    TruncatedSeries<R> body_;
};

// eta as q^{1/24} * (q;q)_inf.
QShiftedSeries<Rational> eta_shifted(std::size_t n);

// 1/eta as q^{-1/24} * partition generating function (computed by series
// inversion, independently of the pentagonal p(n) recurrence).
QShiftedSeries<Rational> eta_inverse_shifted(std::size_t n);

}  // namespace pcv
