#pragma once

// Independent oracles for the test suites. Everything here deliberately
// avoids the code paths it checks: partition counts come from a parts-bounded
// DP (not the pentagonal recurrence), the Euler product from literal
// polynomial multiplication (not the pentagonal theorem), Bernoulli numbers
// from Akiyama-Tanigawa (not the binomial recurrence).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracles {

// Number of partitions of each n < count, by DP over allowed part sizes.
inline std::vector<mpz_class> partition_counts(std::size_t count) {
    std::vector<mpz_class> ways(count, mpz_class(0));
    if (count == 0) return ways;
    ways[0] = 1;
    for (std::size_t part = 1; part < count; ++part)
        for (std::size_t s = part; s < count; ++s) ways[s] += ways[s - part];
    return ways;
}

// prod_{m>=1} (1 - q^{t m}) truncated, multiplied out factor by factor.
inline std::vector<mpz_class> naive_euler_product(unsigned long t, std::size_t n) {
    std::vector<mpz_class> acc(n, mpz_class(0));
    acc[0] = 1;
    for (unsigned long m = 1; t * m < n; ++m) {
        // acc *= (1 - q^{t m})
        for (std::size_t i = n; i-- > t * m;) acc[i] -= acc[i - t * m];
    }
    return acc;
}

// B_0..B_{count-1} via Akiyama-Tanigawa (second Bernoulli convention,
// B_1 = +1/2; even indices agree with the recurrence convention).
inline std::vector<mpq_class> bernoulli_akiyama_tanigawa(std::size_t count) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> row;
    for (std::size_t n = 0; n < count; ++n) {
        row.push_back(mpq_class(1, static_cast<long>(n) + 1));
        for (std::size_t j = n; j >= 1; --j) {
            mpq_class d(row[j - 1] - row[j]);
            row[j - 1] = static_cast<long>(j) * d;
        }
        out.push_back(row[0]);
    }
    return out;
}

// Smallest x in [1, ell) with a*x = 1 mod ell, by scan; 0 if none.
inline std::uint64_t brute_force_inverse(std::uint64_t a, std::uint64_t ell) {
    a %= ell;
    for (std::uint64_t x = 1; x < ell; ++x)
        if ((a * x) % ell == 1) return x;
    return 0;
}

// Divisor power sum by trial division over all candidates.
inline mpz_class naive_sigma(unsigned r, unsigned long n) {
    mpz_class acc = 0;
    mpz_class t;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(t.get_mpz_t(), d, r);
        acc += t;
    }
    return acc;
}

}  // namespace oracles
