#include "pcv/recurrences.hpp"

#include <mutex>
#include <string>

namespace pcv {

std::vector<PentagonalIndex> pentagonal_range(unsigned long n) {
    std::vector<PentagonalIndex> out;
    for (long a = 1;; ++a) {
        unsigned long w_neg = static_cast<unsigned long>((3 * a * a - a) / 2);  // omega(-a)
        unsigned long w_pos = static_cast<unsigned long>((3 * a * a + a) / 2);  // omega(a)
        if (w_neg > n) break;
        int sign = (a % 2 == 0) ? -1 : 1;  // (-1)^{m+1} for m = +-a
        out.push_back({-a, w_neg, sign});
        if (w_pos <= n) out.push_back({a, w_pos, sign});
    }
    return out;
}

mpq_class rising_factorial(const mpq_class& x, unsigned long j) {
    mpq_class acc(1);
    for (unsigned long i = 0; i < j; ++i) acc *= mpq_class(x + static_cast<long>(i));
    return acc;
}

mpq_class falling_factorial(const mpq_class& x, long m) {
    if (m == 0) return mpq_class(1);
    if (m >= 1) {
        mpq_class acc(1);
        for (long i = 0; i < m; ++i) acc *= mpq_class(x - i);
        return acc;
    }
    mpq_class denom = falling_factorial(x, -m);
    if (sgn(denom) == 0) raise(errc::non_unit, "negative falling factorial of zero product");
    return 1 / denom;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rk_prefactor(unsigned k) {
    mpq_class fall = falling_factorial(mpq_class(2L * k - 2), static_cast<long>(k) - 1);
    mpq_class num = mpq_class(2L * k - 1) * fall * fall;
    // 2^(2k-2) with the k = 0 case meaning 2^-2.
    mpq_class pow2;
    if (k == 0)
        pow2 = mpq_class(1, 4);
    else
        pow2 = mpq_class(mpz_class(1) << (2 * k - 2));
    return Rational(mpq_class(num / pow2));
}

int rk_normalization(unsigned k) { return k == 0 ? -1 : 1; }

Rational g_coeff(unsigned k, const mpz_class& n, long m) {
    mpz_class six_m1 = 6 * mpz_class(m) + 1;
    mpz_class y = six_m1 * six_m1;        // (6m+1)^2
    mpz_class x = 24 * n - y;             // 24n - (6m+1)^2
    mpq_class acc(0);
    std::vector<mpz_class> xpows(k + 1);
    xpows[0] = 1;
    for (unsigned r = 1; r <= k; ++r) xpows[r] = xpows[r - 1] * x;
    mpz_class ypow(1);
    mpz_class fact_2r(1);
    for (unsigned r = 0; r <= k; ++r) {
        if (r > 0) {
            fact_2r *= 2 * r * (2 * r - 1);
            ypow *= y;
        }
        mpz_class fact_2s;
        mpz_fac_ui(fact_2s.get_mpz_t(), 2 * (k - r));
        long sign = ((k + r) % 2 == 0) ? 1 : -1;
        mpq_class term(mpz_class(sign * (2L * static_cast<long>(k) - 2L * r - 1)) * ypow *
                       xpows[k - r]);
        term /= mpq_class(fact_2r * fact_2s);
        acc += term;
    }
    return rk_prefactor(k) * Rational(acc);
}

const std::map<unsigned, Rational>& beta_table() {
    static const std::map<unsigned, Rational> table = {
        {6, Rational(mpz_class("-33108590592"), mpz_class(691))},
        {8, Rational(mpz_class("-187167592415232"), mpz_class(3617))},
        {9, Rational(mpz_class("-28682634201661440"), mpz_class(43867))},
        {10, Rational(mpz_class("-8294726176465158144"), mpz_class(174611))},
        {11, Rational(mpz_class("-101475065073734516736"), mpz_class(77683))},
        {13, Rational(mpz_class("-1195065734266339700244480"), mpz_class(657931))},
    };
    return table;
}

std::vector<mpz_class> partition_values(std::size_t count) {
    std::vector<mpz_class> p(count);
    if (count == 0) return p;
    p[0] = 1;
    for (std::size_t n = 1; n < count; ++n) {
        mpz_class acc = 0;
        for (const PentagonalIndex& t : pentagonal_range(n)) {
            if (t.sign > 0)
                acc += p[n - t.omega];
            else
                acc -= p[n - t.omega];
        }
        p[n] = acc;
    }
    return p;
}

namespace {

std::mutex g_partition_mutex;
std::shared_ptr<const std::vector<mpz_class>> g_partition_table;

}  // namespace

std::shared_ptr<const std::vector<mpz_class>> shared_partition_values(std::size_t count) {
    std::lock_guard<std::mutex> lock(g_partition_mutex);
    if (!g_partition_table || g_partition_table->size() < count) {
        std::size_t have = g_partition_table ? g_partition_table->size() : 0;
        std::size_t target = std::max(count, have * 2);
        // Extend from the old snapshot; the recurrence only reads below n.
        auto grown = std::make_shared<std::vector<mpz_class>>();
        grown->reserve(target);
        if (g_partition_table)
            grown->assign(g_partition_table->begin(), g_partition_table->end());
        if (grown->empty()) grown->push_back(mpz_class(1));
        for (std::size_t n = grown->size(); n < target; ++n) {
            mpz_class acc = 0;
            for (const PentagonalIndex& t : pentagonal_range(n)) {
                if (t.sign > 0)
                    acc += (*grown)[n - t.omega];
                else
                    acc -= (*grown)[n - t.omega];
            }
            grown->push_back(acc);
        }
        g_partition_table = std::move(grown);
    }
    return g_partition_table;
}

template <typename R>
TruncatedSeries<R> r_series_operator_core(unsigned k, const QShiftedSeries<R>& inv_eta,
                                          const QShiftedSeries<R>& eta) {
    const R& like = eta.body().coeff(0);
    std::size_t n = std::min(inv_eta.body().precision(), eta.body().precision());

    // Iterated derivatives D^r(1/eta), D^s(eta), r,s <= k.
    std::vector<QShiftedSeries<R>> d_inv{inv_eta};
    std::vector<QShiftedSeries<R>> d_eta{eta};
    for (unsigned i = 1; i <= k; ++i) {
        d_inv.push_back(d_inv.back().derive());
        d_eta.push_back(d_eta.back().derive());
    }

    TruncatedSeries<R> acc = TruncatedSeries<R>::zero(n, like);
    for (unsigned r = 0; r <= k; ++r) {
        unsigned s = k - r;
        QShiftedSeries<R> prod = d_inv[r] * d_eta[s];
        if (prod.offset() != 0)
            raise(errc::identity_violation, "eta offsets failed to cancel");
        mpz_class f2r, f2s;
        mpz_fac_ui(f2r.get_mpz_t(), 2 * r);
        mpz_fac_ui(f2s.get_mpz_t(), 2 * s);
        long sign = (r % 2 == 0) ? 1 : -1;
        mpq_class w(mpz_class(sign * (2L * r - 1)));
        w /= mpq_class(f2r * f2s);
        acc = acc + prod.body().scaled(like.of_rational(w));
    }

    mpq_class scale(-rk_normalization(k));
    mpz_class p24;
    mpz_ui_pow_ui(p24.get_mpz_t(), 24, k);
    scale *= mpq_class(p24);
    scale *= rk_prefactor(k).raw();
    return acc.scaled(like.of_rational(scale));
}

template TruncatedSeries<Rational> r_series_operator_core<Rational>(
    unsigned, const QShiftedSeries<Rational>&, const QShiftedSeries<Rational>&);
template TruncatedSeries<ModResidue> r_series_operator_core<ModResidue>(
    unsigned, const QShiftedSeries<ModResidue>&, const QShiftedSeries<ModResidue>&);

ModularFormExpansion r_series_operator(unsigned k, std::size_t n) {
    return {2 * k, r_series_operator_core<Rational>(k, eta_inverse_shifted(n), eta_shifted(n))};
}

ModularFormExpansion r_series_convolution(unsigned k, std::size_t n) {
    auto p = shared_partition_values(n);
    int nu = rk_normalization(k);
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        mpz_class nn(static_cast<unsigned long>(idx));
        // m = 0 enters with sign (-1)^{0+1} = -1, exactly as the display sums
        // over all of Z.
        Rational acc = -(g_coeff(k, nn, 0) * Rational((*p)[idx]));
        for (const PentagonalIndex& t : pentagonal_range(idx)) {
            Rational term = g_coeff(k, nn, t.m) * Rational((*p)[idx - t.omega]);
            if (t.sign > 0)
                acc += term;
            else
                acc -= term;
        }
        out.push_back(nu > 0 ? acc : -acc);
    }
    return {2 * k, TruncatedSeries<Rational>(std::move(out))};
}

namespace {

std::mutex g_trace_mutex;
std::map<std::pair<unsigned, std::size_t>, std::shared_ptr<const ModularFormExpansion>>
    g_trace_cache;
std::map<unsigned, std::shared_ptr<const ModularFormExpansion>> g_trace_deepest;

std::mutex g_delta2k_mutex;
std::map<unsigned, std::shared_ptr<const ModularFormExpansion>> g_delta2k_deepest;

// Membership validation inside trace_series is capped: at the large
// precisions the rational trace route runs at, building the echelon basis
// would dominate everything, and the acceptance checks run the full-depth
// membership explicitly.
constexpr std::size_t kTraceMembershipCap = 200;

std::shared_ptr<const ModularFormExpansion> delta_2k_cached(unsigned k, std::size_t n) {
    std::lock_guard<std::mutex> lock(g_delta2k_mutex);
    auto it = g_delta2k_deepest.find(k);
    if (it == g_delta2k_deepest.end() || it->second->series.precision() < n) {
        auto fresh = std::make_shared<const ModularFormExpansion>(delta_2k(k, n));
        g_delta2k_deepest[k] = fresh;
        return fresh;
    }
    return it->second;
}

}  // namespace

std::shared_ptr<const ModularFormExpansion> trace_series(unsigned weight, std::size_t n) {
    if (weight < 12 || weight % 2 != 0)
        raise(errc::invalid_argument,
              "trace series needs even weight >= 12, got " + std::to_string(weight));
    {
        std::lock_guard<std::mutex> lock(g_trace_mutex);
        auto it = g_trace_cache.find({weight, n});
        if (it != g_trace_cache.end()) return it->second;
    }

    unsigned k = weight / 2;
    ModularFormExpansion rk = r_series_operator(k, n);
    ModularFormExpansion ek = eisenstein(weight, n);
    Rational c(binomial(weight - 2, k - 2));
    ModularFormExpansion t{weight, -(rk.series + ek.series.scaled(c))};

    if (!t.series.coeff(0).is_zero())
        raise(errc::identity_violation,
              "trace series has nonzero constant term at weight " + std::to_string(weight));
    std::size_t check_n = std::min(n, kTraceMembershipCap);
    if (check_n > cusp_dim(weight)) {
        Membership mem = cusp_membership(
            ModularFormExpansion{weight, t.series.truncated(check_n)},
            cusp_basis(weight, check_n));
        if (!mem.is_member)
            raise(errc::identity_violation,
                  "trace series is not cuspidal at weight " + std::to_string(weight));
    }

    auto out = std::make_shared<const ModularFormExpansion>(std::move(t));
    std::lock_guard<std::mutex> lock(g_trace_mutex);
    g_trace_cache[{weight, n}] = out;
    auto& deepest = g_trace_deepest[weight];
    if (!deepest || deepest->series.precision() < n) deepest = out;
    return out;
}

Rational trace_value(unsigned weight, unsigned long n) {
    if (cusp_dim(weight) == 0) return Rational(0);
    std::shared_ptr<const ModularFormExpansion> cached;
    {
        std::lock_guard<std::mutex> lock(g_trace_mutex);
        auto it = g_trace_deepest.find(weight);
        if (it != g_trace_deepest.end()) cached = it->second;
    }
    if (!cached || n >= cached->series.precision())
        raise(errc::insufficient_precision,
              "trace value at n = " + std::to_string(n) + " beyond cached precision");
    return cached->series.coeff(n);
}

mpz_class p_via_recurrence(unsigned long n, unsigned k, RecurrenceBranch branch) {
    if (k < 2) raise(errc::invalid_argument, "recurrence branches need k >= 2");
    static const std::map<RecurrenceBranch, const char*> names = {
        {RecurrenceBranch::divisor_only, "(2)"},
        {RecurrenceBranch::beta_delta, "(3)"},
        {RecurrenceBranch::hecke_trace, "(4)"}};
    if (branch == RecurrenceBranch::divisor_only &&
        !(k == 2 || k == 3 || k == 4 || k == 5 || k == 7))
        raise(errc::invalid_argument, "branch (2) covers k in {2,3,4,5,7}");
    if (branch == RecurrenceBranch::beta_delta && beta_table().find(k) == beta_table().end())
        raise(errc::invalid_argument, "branch (3) covers k in {6,8,9,10,11,13}");

    mpz_class nn(static_cast<unsigned long>(n));
    Rational g0 = g_coeff(k, nn, 0);
    if (g0.is_zero())
        raise(errc::degenerate_leading_weight,
              "g_k(n,0) = 0 at n = " + std::to_string(n) + ", k = " + std::to_string(k));

    auto p = shared_partition_values(n + 1);

    // -(4k/B_2k) C(2k-2, k-2) sigma_{2k-1}(n)
    Rational divisor_term = -(Rational(2L * (2 * k)) * bernoulli(2 * k).inv() *
                              Rational(binomial(2 * k - 2, k - 2)) * Rational(sigma(2 * k - 1, n)));

    Rational bracket = divisor_term;
    if (branch == RecurrenceBranch::beta_delta) {
        auto d2k = delta_2k_cached(k, n + 1);
        bracket += beta_table().at(k) * d2k->series.coeff(n);
    } else if (branch == RecurrenceBranch::hecke_trace) {
        bracket += trace_value(2 * k, n);
    }
    for (const PentagonalIndex& t : pentagonal_range(n)) {
        Rational term = g_coeff(k, nn, t.m) * Rational((*p)[n - t.omega]);
        if (t.sign > 0)
            bracket += term;
        else
            bracket -= term;
    }

    Rational result = g0.inv() * bracket;
    if (!result.is_integer())
        raise(errc::identity_violation, "recurrence branch " + std::string(names.at(branch)) +
                                            " produced a non-integer at n = " + std::to_string(n));
    return result.numerator();
}

}  // namespace pcv
