#pragma once

#include <map>
#include <memory>
#include <vector>

#include "pcv/modforms.hpp"
#include "pcv/qshifted.hpp"

namespace pcv {

// Nonzero pentagonal index m with omega(m) = (3m^2+m)/2 and sign (-1)^{m+1}.
struct PentagonalIndex {
    long m = 0;
    unsigned long omega = 0;
    int sign = 1;
};

// All m != 0 with omega(m) <= n, in increasing omega order (equivalently
// m = -1, 1, -2, 2, ...).
std::vector<PentagonalIndex> pentagonal_range(unsigned long n);

// Rising factorial x(x+1)...(x+j-1); (x)^[0] = 1.
mpq_class rising_factorial(const mpq_class& x, unsigned long j);

// Falling factorial with the three-case convention:
// m >= 1: x(x-1)...(x-m+1); m = 0: 1; m <= -1: 1/(x)_{-m}.
mpq_class falling_factorial(const mpq_class& x, long m);

mpz_class binomial(unsigned long n, unsigned long k);

// (2k-1) (2k-2)_{k-1}^2 / 2^{2k-2}, the shared prefactor of R_k and g_k.
// The k = 0 case rides on the negative-index falling factorial.
Rational rk_prefactor(unsigned k);

// Global normalization shared by the two R_k routes: the convolution display
// evaluates to -1 at k = 0 while R_0 = 1, so both routes carry this sign.
int rk_normalization(unsigned k);

// g_k(n, m): exact closed form, polynomial in n and m.
Rational g_coeff(unsigned k, const mpz_class& n, long m);

// The six beta_k constants of the weight-2k cusp corrections.
const std::map<unsigned, Rational>& beta_table();

// p(0..count-1) by the pentagonal recurrence; p(0) = 1.
std::vector<mpz_class> partition_values(std::size_t count);

// Shared, monotonically grown partition table (sized by the largest request
// seen); snapshots are immutable.
std::shared_ptr<const std::vector<mpz_class>> shared_partition_values(std::size_t count);

// R_k by iterated D on the eta pair, any coefficient ring. Weights are
// (-1)^r (2r-1)/((2r)! (2s)!) against D^r(1/eta) D^s(eta), scaled by
// -(normalization) 24^k (prefactor included). The eta offsets cancel; the
// result is integer-exponent.
template <typename R>
TruncatedSeries<R> r_series_operator_core(unsigned k, const QShiftedSeries<R>& inv_eta,
                                          const QShiftedSeries<R>& eta);

// The two independent R_k routes (weight-2k expansions over Q).
ModularFormExpansion r_series_operator(unsigned k, std::size_t n);
ModularFormExpansion r_series_convolution(unsigned k, std::size_t n);

// T_{2k} = -R_k - C(2k-2, k-2) E_{2k} for k >= 6; constant term checked, and
// cusp membership validated at min(n, 200). Memoized per (weight, n).
std::shared_ptr<const ModularFormExpansion> trace_series(unsigned weight, std::size_t n);

// Tr_{2k}(n): 0 whenever dim S_{2k} = 0, otherwise read from the deepest
// cached trace series (InsufficientPrecision if none reaches n).
Rational trace_value(unsigned weight, unsigned long n);

enum class RecurrenceBranch {
    divisor_only = 2,  // k in {2,3,4,5,7}
    beta_delta = 3,    // k in {6,8,9,10,11,13}
    hecke_trace = 4,   // any k >= 2 (uses trace_value)
};

// Right-hand side of the selected recurrence branch at n; the result must be
// the integer p(n) exactly (IdentityViolation otherwise). g_k(n,0) = 0 is
// DegenerateLeadingWeight.
mpz_class p_via_recurrence(unsigned long n, unsigned k, RecurrenceBranch branch);

}  // namespace pcv
