#include "pcv/modforms.hpp"

#include <mutex>

namespace pcv {

ModularFormExpansion operator+(const ModularFormExpansion& a, const ModularFormExpansion& b) {
    if (a.weight != b.weight)
        raise(errc::invalid_argument, "adding weights " + std::to_string(a.weight) + " and " +
                                          std::to_string(b.weight));
    return {a.weight, a.series + b.series};
}

ModularFormExpansion operator-(const ModularFormExpansion& a, const ModularFormExpansion& b) {
    if (a.weight != b.weight)
        raise(errc::invalid_argument, "subtracting weights " + std::to_string(a.weight) +
                                          " and " + std::to_string(b.weight));
    return {a.weight, a.series - b.series};
}

ModularFormExpansion operator*(const ModularFormExpansion& a, const ModularFormExpansion& b) {
    return {a.weight + b.weight, a.series * b.series};
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, ...

mpz_class binom_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

Rational bernoulli(unsigned r) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    // sum_{j<=m} C(m+1,j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1,j) B_j
    while (g_bernoulli.size() <= r) {
        unsigned long m = g_bernoulli.size();
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j)
            acc += Rational(binom_mpz(m + 1, j)) * g_bernoulli[j];
        g_bernoulli.push_back(-(acc * Rational(1, static_cast<long>(m) + 1)));
    }
    return g_bernoulli[r];
}

mpz_class sigma(unsigned r, unsigned long n) {
    if (n == 0) raise(errc::invalid_argument, "sigma needs n >= 1");
    mpz_class acc = 0;
    mpz_class t;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(t.get_mpz_t(), d, r);
        acc += t;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), e, r);
            acc += t;
        }
    }
    return acc;
}

std::vector<mpz_class> sigma_table(unsigned r, std::size_t count) {
    std::vector<mpz_class> s(count, mpz_class(0));
    mpz_class t;
    for (std::size_t d = 1; d < count; ++d) {
        mpz_ui_pow_ui(t.get_mpz_t(), d, r);
        for (std::size_t m = d; m < count; m += d) s[m] += t;
    }
    return s;
}

ModularFormExpansion eisenstein(unsigned weight, std::size_t n) {
    if (weight < 4 || weight % 2 != 0)
        raise(errc::invalid_argument, "Eisenstein weight must be even and >= 4");
    Rational factor = -(Rational(2L * weight) * bernoulli(weight).inv());  // -4k/B_2k
    std::vector<mpz_class> sig = sigma_table(weight - 1, n);
    std::vector<Rational> c;
    c.reserve(n);
    c.emplace_back(1);
    for (std::size_t i = 1; i < n; ++i) c.push_back(factor * Rational(sig[i]));
    return {weight, TruncatedSeries<Rational>(std::move(c))};
}

ModularFormExpansion delta(std::size_t n) {
    // q * (q;q)_inf^24; the 24th power runs at precision n and the shift by
    // one exponent stays inside the same window.
    return {12, euler_product(1, n).pow(24).shifted_up(1)};
}

ModularFormExpansion delta_2k(unsigned k, std::size_t n) {
    ModularFormExpansion d = delta(n);
    switch (k) {
        case 6: return d;
        case 8: return d * eisenstein(4, n);
        case 9: return d * eisenstein(6, n);
        case 10: return d * eisenstein(4, n) * eisenstein(4, n);
        case 11: return d * eisenstein(4, n) * eisenstein(6, n);
        case 13: return d * eisenstein(4, n) * eisenstein(4, n) * eisenstein(6, n);
        default:
            raise(errc::unsupported_weight, "Delta_2k defined for k in {6,8,9,10,11,13}, got " +
                                                std::to_string(k));
    }
}

std::size_t cusp_dim(unsigned weight) {
    if (weight % 2 != 0 || weight < 12) return 0;
    std::size_t dim_m = weight / 12 + (weight % 12 == 2 ? 0 : 1);
    return dim_m - 1;
}

CuspBasis cusp_basis(unsigned weight, std::size_t n) {
    std::size_t d = cusp_dim(weight);
    if (n <= d)
        raise(errc::insufficient_precision, "cusp basis at weight " + std::to_string(weight) +
                                                " needs precision > " + std::to_string(d));
    CuspBasis basis{weight, d, n, {}};
    if (d == 0) return basis;

    ModularFormExpansion dlt = delta(n);
    ModularFormExpansion e4 = eisenstein(4, n);
    ModularFormExpansion e6 = eisenstein(6, n);

    // Triangular spanning set f_i = Delta^i E_4^b E_6^c with leading term
    // q^i: pick the least c in {0,1} fixing (weight - 12 i - 6c) mod 4 = 0.
    std::vector<ModularFormExpansion> rows;
    for (std::size_t i = 1; i <= d; ++i) {
        unsigned rem = weight - 12 * static_cast<unsigned>(i);
        unsigned c = (rem % 4 == 0) ? 0 : 1;
        unsigned b = (rem - 6 * c) / 4;
        ModularFormExpansion f = dlt;
        for (std::size_t a = 1; a < i; ++a) f = f * dlt;
        for (unsigned t = 0; t < b; ++t) f = f * e4;
        for (unsigned t = 0; t < c; ++t) f = f * e6;
        rows.push_back(std::move(f));
    }

    // Back-substitute to the echelon form b_i = q^i + O(q^{d+1}); pivots are
    // 1 already, so the eliminations stay integral.
    for (std::size_t i = d; i-- > 0;) {
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational c = rows[i].series.coeff(j + 1);
            if (!c.is_zero()) rows[i] = rows[i] - ModularFormExpansion{weight, rows[j].series.scaled(c)};
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 1; j <= d; ++j) {
            bool expect_one = (j == i + 1);
            const Rational& c = rows[i].series.coeff(j);
            if (c.is_one() != expect_one || (!expect_one && !c.is_zero()))
                raise(errc::identity_violation, "echelon property failed at weight " +
                                                    std::to_string(weight));
        }
    basis.forms = std::move(rows);
    return basis;
}

Membership cusp_membership(const ModularFormExpansion& f, const CuspBasis& basis) {
    if (f.weight != basis.weight)
        raise(errc::invalid_argument, "form weight " + std::to_string(f.weight) +
                                          " vs basis weight " + std::to_string(basis.weight));
    if (!f.series.coeff(0).is_zero())
        raise(errc::not_cuspidal, "nonzero constant term");
    std::size_t n = std::min(f.series.precision(), basis.precision);
    if (n <= basis.dimension)
        raise(errc::insufficient_precision, "membership needs precision > dim");

    TruncatedSeries<Rational> residual = f.series.truncated(n);
    std::vector<Rational> coords;
    coords.reserve(basis.dimension);
    for (std::size_t i = 0; i < basis.dimension; ++i) {
        Rational c = residual.coeff(i + 1);
        coords.push_back(c);
        if (!c.is_zero()) residual = residual - basis.forms[i].series.truncated(n).scaled(c);
    }
    bool member = residual.is_zero();
    return {std::move(coords), std::move(residual), member};
}

}  // namespace pcv
