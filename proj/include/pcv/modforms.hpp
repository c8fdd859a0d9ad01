#pragma once

#include <cstddef>
#include <vector>

#include "pcv/series.hpp"

namespace pcv {

// A q-expansion tagged with its weight. The weight is metadata: addition
// checks it, multiplication adds it.
struct ModularFormExpansion {
    unsigned weight = 0;
    TruncatedSeries<Rational> series;

    bool is_cuspidal() const { return series.coeff(0).is_zero(); }
};

ModularFormExpansion operator+(const ModularFormExpansion& a, const ModularFormExpansion& b);
ModularFormExpansion operator-(const ModularFormExpansion& a, const ModularFormExpansion& b);
ModularFormExpansion operator*(const ModularFormExpansion& a, const ModularFormExpansion& b);

// Exact Bernoulli number B_r (B_1 = -1/2 convention); memoized, thread-safe.
Rational bernoulli(unsigned r);

// sigma_r(n) = sum of d^r over divisors d of n.
mpz_class sigma(unsigned r, unsigned long n);

// sigma_r(n) for all 1 <= n < count via a divisor sieve (index 0 unused).
std::vector<mpz_class> sigma_table(unsigned r, std::size_t count);

// E_{2k} = 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n, weight >= 4 even.
ModularFormExpansion eisenstein(unsigned weight, std::size_t n);

// Delta = q (q;q)_inf^24, integer exponents throughout.
ModularFormExpansion delta(std::size_t n);

// The Delta_{2k} table: Delta times monomials in E_4, E_6 for
// k in {6, 8, 9, 10, 11, 13}; anything else is UnsupportedWeight.
ModularFormExpansion delta_2k(unsigned k, std::size_t n);

// U_j: coefficient n of the output is coefficient j*n of the input. Output
// precision: coefficient n is known iff j*n < prec(f).
template <typename R>
TruncatedSeries<R> u_operator(const TruncatedSeries<R>& f, unsigned long j) {
    if (j == 0) raise(errc::invalid_argument, "U_j needs j >= 1");
    std::size_t out_n = (f.precision() - 1) / j + 1;
    std::vector<R> out;
    out.reserve(out_n);
    for (std::size_t i = 0; i < out_n; ++i) out.push_back(f.coeff(i * j));
    return TruncatedSeries<R>(std::move(out));
}

// dim S_{2k} on the full modular group (0 for odd or < 12 weights except the
// classical table; computed from the level-1 dimension formula).
std::size_t cusp_dim(unsigned weight);

// Echelonized basis of S_{2k}: b_i = q^i + O(q^{d+1}), each an integer
// combination of Delta^a E_4^b E_6^c monomials.
struct CuspBasis {
    unsigned weight = 0;
    std::size_t dimension = 0;
    std::size_t precision = 0;
    std::vector<ModularFormExpansion> forms;
};

CuspBasis cusp_basis(unsigned weight, std::size_t n);

struct Membership {
    std::vector<Rational> coordinates;
    TruncatedSeries<Rational> residual;
    bool is_member = false;
};

// Coordinates read off the echelon positions; membership holds iff the
// residual vanishes to the shared precision. Nonzero constant term is
// NotCuspidal.
Membership cusp_membership(const ModularFormExpansion& f, const CuspBasis& basis);

}  // namespace pcv
