#include "pcv/series.hpp"

#include "pcv/qshifted.hpp"

namespace pcv {

TruncatedSeries<Rational> euler_product(unsigned long t, std::size_t n) {
    if (t == 0) raise(errc::invalid_argument, "euler_product needs t >= 1");
    if (n == 0) raise(errc::invalid_argument, "series needs precision >= 1");
    std::vector<Rational> c(n, Rational(0));
    c[0] = Rational(1);
    // omega(m) = (3m^2+m)/2 over m = -1, 1, -2, 2, ... visits increasing
    // exponents; sign is (-1)^m.
    for (unsigned long a = 1;; ++a) {
        unsigned long w_neg = (3 * a * a - a) / 2;  // omega(-a)
        unsigned long w_pos = (3 * a * a + a) / 2;  // omega(a)
        if (t * w_neg >= n) break;
        int sign = (a % 2 == 0) ? 1 : -1;  // (-1)^(+-a)
        c[t * w_neg] = Rational(sign);
        if (t * w_pos < n) c[t * w_pos] = Rational(sign);
    }
    return TruncatedSeries<Rational>(std::move(c));
}

TruncatedSeries<ModResidue> reduce_mod(const TruncatedSeries<Rational>& f, std::uint64_t ell) {
    if (!is_prime_u64(ell)) raise(errc::invalid_prime, std::to_string(ell) + " is not prime");
    ModResidue like(0, ell);
    std::vector<ModResidue> out;
    out.reserve(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i)
        out.push_back(like.of_rational(f.coeff(i).raw()));
    return TruncatedSeries<ModResidue>(std::move(out));
}

QShiftedSeries<Rational> eta_shifted(std::size_t n) {
    return QShiftedSeries<Rational>(mpq_class(1, 24), euler_product(1, n));
}

QShiftedSeries<Rational> eta_inverse_shifted(std::size_t n) {
    return QShiftedSeries<Rational>(mpq_class(-1, 24), euler_product(1, n).inverse());
}

}  // namespace pcv
