#include <atomic>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "pcv/recurrences.hpp"

using namespace pcv;

TEST_CASE("pentagonal range") {
    CHECK(pentagonal_range(0).empty());

    auto r7 = pentagonal_range(7);
    REQUIRE(r7.size() == 4);
    CHECK(r7[0].m == -1);
    CHECK(r7[0].omega == 1);
    CHECK(r7[1].m == 1);
    CHECK(r7[1].omega == 2);
    CHECK(r7[2].m == -2);
    CHECK(r7[2].omega == 5);
    CHECK(r7[3].m == 2);
    CHECK(r7[3].omega == 7);
    CHECK(r7[0].sign == 1);   // (-1)^{m+1} with m = -1
    CHECK(r7[2].sign == -1);  // m = -2

    // n=100 against a brute scan over |m| <= 20.
    auto r100 = pentagonal_range(100);
    std::size_t count = 0;
    for (long m = -20; m <= 20; ++m) {
        if (m == 0) continue;
        long w = (3 * m * m + m) / 2;
        if (w >= 0 && w <= 100) ++count;
    }
    CHECK(r100.size() == count);
    for (std::size_t i = 1; i < r100.size(); ++i) CHECK(r100[i - 1].omega < r100[i].omega);
    for (const auto& t : r100)
        CHECK(t.omega == static_cast<unsigned long>((3 * t.m * t.m + t.m) / 2));
}

TEST_CASE("factorial kit") {
    CHECK(rising_factorial(mpq_class(5), 0) == 1);
    CHECK(rising_factorial(mpq_class(3, 2), 3) == mpq_class(3, 2) * mpq_class(5, 2) * mpq_class(7, 2));
    CHECK(falling_factorial(mpq_class(7), 0) == 1);
    CHECK(falling_factorial(mpq_class(10), 5) == 10 * 9 * 8 * 7 * 6);
    CHECK(falling_factorial(mpq_class(-2), -1) == mpq_class(-1, 2));
    CHECK(falling_factorial(mpq_class(5), -2) == 1 / mpq_class(20));
}

TEST_CASE("rk prefactor") {
    // k=6: (11)(10)_5^2 / 2^10, evaluated directly.
    mpq_class fall10_5 = falling_factorial(mpq_class(10), 5);
    CHECK(rk_prefactor(6).raw() == 11 * fall10_5 * fall10_5 / 1024);
    CHECK(rk_prefactor(0) == Rational(-1));
    CHECK(rk_prefactor(1) == Rational(1));
    CHECK(rk_prefactor(2) == Rational(3));
    CHECK(rk_normalization(0) == -1);
    CHECK(rk_normalization(5) == 1);
}

TEST_CASE("g coefficients") {
    for (long n : {0L, 1L, 7L, 40L})
        for (long m : {-3L, -1L, 0L, 2L}) CHECK(g_coeff(0, mpz_class(n), m) == Rational(1));

    // Hand-derived exact fraction values feeding the R_2 = -E_4 relation at
    // q^1: -g_2(1,0) p(1) + g_2(1,-1) p(0) = -240.
    CHECK(g_coeff(2, mpz_class(1), 0) == Rational(181));
    CHECK(g_coeff(2, mpz_class(1), -1) == Rational(-59));
    CHECK(g_coeff(2, mpz_class(0), 0) == Rational(1));
    Rational relation = -g_coeff(2, mpz_class(1), 0) + g_coeff(2, mpz_class(1), -1);
    CHECK(relation == eisenstein(4, 2).series.coeff(1) * Rational(-1));
}

TEST_CASE("beta table") {
    const auto& betas = beta_table();
    REQUIRE(betas.size() == 6);
    CHECK(betas.at(6) == Rational(mpz_class("-33108590592"), mpz_class(691)));
    CHECK(betas.at(13) ==
          Rational(mpz_class("-1195065734266339700244480"), mpz_class(657931)));
}

TEST_CASE("partition values") {
    auto p = partition_values(41);
    auto expect = oracles::partition_counts(41);
    for (std::size_t i = 0; i <= 40; ++i) CHECK(p[i] == expect[i]);
    CHECK(p[0] == 1);
    CHECK(p[4] == 5);
    CHECK(p[6] == 11);
    CHECK(p[19] == 490);

    auto shared = shared_partition_values(100);
    CHECK((*shared)[40] == expect[40]);
    auto bigger = shared_partition_values(200);
    CHECK((*bigger)[40] == expect[40]);
    CHECK(bigger->size() >= 200);
}

TEST_CASE("r series, small weights") {
    auto r0 = r_series_operator(0, 64);
    CHECK(equal_upto_min(r0.series, TruncatedSeries<Rational>::constant(64, Rational(1))));
    CHECK(r0.weight == 0);

    auto r1 = r_series_operator(1, 64);
    CHECK(r1.series.is_zero());

    auto r2 = r_series_operator(2, 50);
    auto e4 = eisenstein(4, 50);
    CHECK(equal_upto_min(r2.series, e4.series.scaled(Rational(-1))));

    auto c0 = r_series_convolution(0, 20);
    CHECK(equal_upto_min(c0.series, TruncatedSeries<Rational>::constant(20, Rational(1))));
}

TEST_CASE("r series convolution matches the closed forms") {
    // k=6 at N=30: -C(10,4) E_12 - beta_6 Delta.
    auto conv = r_series_convolution(6, 30);
    auto expect = eisenstein(12, 30).series.scaled(Rational(-210)) -
                  delta(30).series.scaled(beta_table().at(6));
    CHECK(equal_upto_min(conv.series, expect));
}

TEST_CASE("route equality, moderate weights") {
    for (unsigned k = 0; k <= 8; ++k)
        CHECK(equal_upto_min(r_series_operator(k, 40).series,
                             r_series_convolution(k, 40).series));
}

TEST_CASE("trace series") {
    CHECK_THROWS_AS(trace_series(4, 20), error);

    auto t12 = trace_series(12, 40);
    CHECK(equal_upto_min(t12->series, delta(40).series.scaled(beta_table().at(6))));

    auto t24 = trace_series(24, 40);
    auto basis = cusp_basis(24, 40);
    auto mem = cusp_membership(*t24, basis);
    CHECK(mem.is_member);
    REQUIRE(mem.coordinates.size() == 2);
    CHECK(mem.coordinates[0] == t24->series.coeff(1));
    CHECK(mem.coordinates[1] == t24->series.coeff(2));
}

TEST_CASE("trace values") {
    for (unsigned long n = 1; n < 10; ++n) CHECK(trace_value(4, n) == Rational(0));
    CHECK(trace_value(14, 3) == Rational(0));

    trace_series(12, 40);
    CHECK(trace_value(12, 1) == beta_table().at(6));
    CHECK(trace_value(12, 2) == beta_table().at(6) * Rational(-24));  // tau(2) = -24

    CHECK_THROWS_AS(trace_value(12, 4000), error);
}

TEST_CASE("memoized state is safe under concurrent use") {
    // Shared caches (partition table, trace series, Bernoulli memo) behind
    // their mutexes; values must come out identical from every thread.
    std::vector<std::thread> pool;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&failures, t] {
            try {
                auto p = shared_partition_values(500 + 40 * t);
                if ((*p)[19] != 490) ++failures;
                auto ts = trace_series(12, 30);
                if (ts->series.coeff(1) != beta_table().at(6)) ++failures;
                if (!(bernoulli(12) == Rational(-691, 2730))) ++failures;
                auto r = r_series_operator(2, 20);
                if (!(r.series.coeff(0) == Rational(-1))) ++failures;
            } catch (...) {
                ++failures;
            }
        });
    for (auto& th : pool) th.join();
    CHECK(failures.load() == 0);
}

TEST_CASE("recurrence branches") {
    CHECK(p_via_recurrence(1, 2, RecurrenceBranch::divisor_only) == 1);

    trace_series(12, 10);
    CHECK(p_via_recurrence(2, 6, RecurrenceBranch::beta_delta) == 2);
    CHECK(p_via_recurrence(2, 6, RecurrenceBranch::hecke_trace) == 2);

    auto p = partition_values(30);
    for (unsigned long n = 1; n < 30; ++n) {
        CHECK(p_via_recurrence(n, 3, RecurrenceBranch::divisor_only) == p[n]);
        CHECK(p_via_recurrence(n, 7, RecurrenceBranch::divisor_only) == p[n]);
    }

    CHECK_THROWS_AS(p_via_recurrence(3, 6, RecurrenceBranch::divisor_only), error);
    CHECK_THROWS_AS(p_via_recurrence(3, 2, RecurrenceBranch::beta_delta), error);
    CHECK_THROWS_AS(p_via_recurrence(3, 1, RecurrenceBranch::hecke_trace), error);
}
