#pragma once

#include <cstdint>
#include <utility>

#include "pcv/recurrences.hpp"
#include "pcv/report.hpp"

namespace pcv {

// Every ell-dependent scalar of the congruence pipeline, cross-validated at
// construction: rho_ell by its three routes (binomial sum, Wilson reduction,
// factorial closed form), c_ell by its two, and the sign identity
// sigma_ell = -(-1/ell) against the explicit (-1)^((ell+-...)/6) branches.
// theta_sign = m_ell * sigma is the sign in theta_ell = theta_sign *
// (q^ell;q^ell)_inf; c = 2 3bar m_ell (-1/ell) ((ell+1)/2)!^(ell-3) is the
// constant the congruence holds with (the m_ell factor matters for
// ell = 5 mod 6).
struct PrimeContext {
    std::uint64_t ell = 0;
    std::uint64_t delta = 0;  // (ell^2 - 1)/24
    int m_ell = 0;            // +1 iff ell = 1 mod 6
    long alpha = 0;           // (ell*m_ell - 1)/6
    std::uint64_t rho = 0;    // in [0, ell)
    std::uint64_t c = 0;      // congruence constant, in [0, ell)
    int sigma = 0;            // -(-1/ell) in {+1, -1}
    int theta_sign = 0;       // m_ell * sigma in {+1, -1}
};

PrimeContext prime_context(std::uint64_t ell);

// (sum C(2M,2r) r, sum C(2M,2r)) by direct summation.
std::pair<mpz_class, mpz_class> binomial_even_sums(unsigned long big_m);

// theta_ell = sum_s (-1)^(s + alpha + 1) q^(ell(3s^2 + m_ell s)/2), exact
// integer coefficients; equals sigma_ell (q^ell; q^ell)_inf.
TruncatedSeries<Rational> theta_series(std::uint64_t ell, std::size_t n);

// Raw integer values p(ell*n - delta_ell) for n = 0..count-1 (0 for negative
// arguments), and the same series reduced mod ell.
std::vector<mpz_class> P_ell_values(std::uint64_t ell, std::size_t count);
TruncatedSeries<ModResidue> P_ell_series(std::uint64_t ell, std::size_t n);

enum class TraceRoute {
    rational,  // ground truth: rational trace series at precision ell*n, reduced, then U_ell
    mod_fast,  // all-mod-ell: R_k in F_ell, E_{ell-1} = 1 by von Staudt-Clausen
};

// T_ell = sum_{n>=1} Tr_{ell-1}(ell n) q^n reduced mod ell; the zero series
// when dim S_{ell-1} = 0.
TruncatedSeries<ModResidue> T_ell_series(std::uint64_t ell, std::size_t n,
                                         TraceRoute route = TraceRoute::rational);

// --- verification suites (each returns one structured report) ---

// Exceptional-class reduction: g_{(ell-1)/2}(ell n, m) = rho (6m+1)^(ell-1)
// mod ell, i.e. rho off the class 6m = -1 and 0 on it.
VerificationReport g_mod_reduction_check(std::uint64_t ell, unsigned long n, long m);

// Restricted pentagonal recurrence for the traces: Tr_{ell-1}(ell n) =
// rho * sum over 6m = -1 (mod ell) of (-1)^(m+1) p(ell n - omega(m)),
// for 1 <= n <= n_max.
VerificationReport verify_prop31(std::uint64_t ell, unsigned long n_max);

// The headline congruence P_ell (q^ell;q^ell) = c_ell T_ell, checked in
// multiplied-through form (division form recorded in the note).
VerificationReport verify_theorem1(std::uint64_t ell, std::size_t n);

// Rational-route vs mod-fast-route agreement for T_ell.
VerificationReport verify_tell_routes(std::uint64_t ell, std::size_t n);

// Ramanujan congruences p(ln + d) = 0 mod l for (l,d) in {(5,4),(7,5),(11,6)}.
VerificationReport verify_cor12(std::uint64_t ell, unsigned long n_max);

// Coefficient-level convolution form of the congruence, with both index
// conventions reported separately.
struct Cor13Reports {
    VerificationReport direct;      // trace argument ell(n - ell j), the true convolution
    VerificationReport as_written;  // trace argument ell(m - j) under ell j + m = n
};
Cor13Reports verify_cor13(std::uint64_t ell, unsigned long n_max);

// The exact eta-quotient identities for ell = 5, 7, over the integers.
VerificationReport ramanujan_exact_identity(std::uint64_t ell, std::size_t n);

// theta_ell = sigma_ell (q^ell;q^ell)_inf termwise.
VerificationReport verify_theta(std::uint64_t ell, std::size_t n);

// PrimeContext route consistency plus the falling-factorial congruence.
VerificationReport verify_context(std::uint64_t ell);

// Even-index binomial sums against their closed forms for 1 <= M <= m_max.
VerificationReport verify_binomial_sums(unsigned long m_max);

// Closed-form identity for R_k at one k (constant, zero, Eisenstein, or
// Eisenstein plus beta_k Delta_2k, selected by k).
VerificationReport verify_rk_identity(unsigned k, std::size_t n);

// r_series_operator == r_series_convolution.
VerificationReport verify_route_equality(unsigned k, std::size_t n);

// Trace series is cuspidal with zero membership residual.
VerificationReport verify_trace_membership(unsigned k, std::size_t n);

// Recurrence branches reproduce p(n) for n <= n_max (skipped n recorded).
VerificationReport verify_recurrence(unsigned k, unsigned long n_max);

}  // namespace pcv
