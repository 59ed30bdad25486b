#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

#include "azeta/rational.hpp"
#include "azeta/types.hpp"

// Scalar special functions and arithmetic primitives: zeta and zeta' on
// (0, inf) \ {1} via Euler-Maclaurin summation, the regularized
// F(s) = zeta(s) - 1 - 1/(s-1), the Dirichlet lambda function, log-gamma,
// exact Bernoulli numbers, a prime sieve and the Moebius function.

namespace azeta::specfun {

inline double ln_gamma(double x);

namespace detail {

// B_{2j}/(2j)! as binary64, derived from the exact Bernoulli cache below.
double em_coefficient(int j);

struct EmResult {
    double value = 0.0;        // F(s) = zeta(s) - 1 - 1/(s-1)
    double deriv = 0.0;        // F'(s)
    double rem_value = 0.0;    // truncation bound for value
    double rem_deriv = 0.0;    // truncation bound for deriv
    std::int64_t terms = 0;    // direct-sum length N
};

// (N^{1-s} - 1)/(s-1) and its s-derivative, with the pole at s = 1 removed
// symbolically.  g(t) = expm1(t)/t, g'(t) = ((t-1)e^t + 1)/t^2, t = (1-s)lnN.
inline double em_pole_part(double log_n, double t) {
    double g = (t == 0.0) ? 1.0 : std::expm1(t) / t;
    return -log_n * g;
}

inline double em_pole_part_deriv(double log_n, double t) {
    double gp;
    if (std::abs(t) < 0.25) {
        // g'(t) = sum_{k>=1} k t^{k-1}/(k+1)!; 12 terms reach 1e-16 at |t|=1/4
        static constexpr double c[12] = {
            1.0 / 2,      1.0 / 3,       1.0 / 8,       1.0 / 30,
            1.0 / 144,    1.0 / 840,     1.0 / 5760,    1.0 / 45360,
            1.0 / 403200, 1.0 / 3991680, 2.2964454e-8,  1.9270853e-9};
        gp = 0.0;
        for (int i = 11; i >= 0; --i) gp = gp * t + c[i];
    } else {
        gp = ((t - 1.0) * std::exp(t) + 1.0) / (t * t);
    }
    return log_n * log_n * gp;
}

// Euler-Maclaurin evaluation of F(s) and F'(s) for s > 0.  Corrections use
// B_2..B_{2q} (q = em_order/2); the remainder is bounded through the Fourier
// bound |~B_{2q+1}(x)| <= 2 (2q+1)! zeta(2q+1) / (2pi)^{2q+1}:
//   |R|  <= kappa (s)_{2q+1} N^{-s-2q} / (s+2q)
//   |R'| <= kappa (s)_{2q+1} N^{-s-2q} [ (lnN + H) / (s+2q) + 1/(s+2q)^2 ]
// with H = sum_{i=0}^{2q} 1/(s+i) and kappa = 2 zeta(2q+1) / (2pi)^{2q+1}.
inline EmResult em_F(double s, const EvalConfig& cfg) {
    if (s > 50.0) {
        // plain Dirichlet sums: F(s) = sum_{n>=2} n^{-s} - 1/(s-1), with
        // integral-comparison tails; a handful of terms reaches binary64
        KahanSum sum, dsum;
        std::int64_t n = 2;
        double tail = 0.0;
        for (;; ++n) {
            double x = std::pow(static_cast<double>(n), -s);
            sum.add(x);
            dsum.add(-std::log(static_cast<double>(n)) * x);
            tail = std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
            if (tail <= std::max(1e-18, 0.01 * cfg.target_tol) || n >= 64) break;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        double nd = static_cast<double>(n);
        EmResult r;
        r.value = sum.value() - 1.0 / (s - 1.0);
        r.deriv = dsum.value() + 1.0 / ((s - 1.0) * (s - 1.0));
        r.rem_value = tail + eps * (2.0 / (s - 1.0) + 2.0 * std::abs(sum.value()));
        r.rem_deriv = std::pow(nd, 1.0 - s) *
                          (std::log(nd) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) +
                      eps * (2.0 / (s - 1.0) + 2.0 * std::abs(dsum.value()));
        r.terms = n - 1;
        return r;
    }

    const int q = cfg.em_order / 2;
    const double kappa =
        2.0 * 1.2020569031595943 / std::pow(2.0 * std::numbers::pi, 2 * q + 1);

    auto remainder_bounds = [&](double n_dbl, double& rv, double& rd) {
        double poch = s, harm = 1.0 / s;
        for (int j = 1; j <= q; ++j) {
            harm += 1.0 / (s + 2 * j - 1) + 1.0 / (s + 2 * j);
            poch *= (s + 2 * j - 1) * (s + 2 * j);
        }
        double scale = kappa * poch * std::pow(n_dbl, -s - 2 * q);
        rv = scale / (s + 2 * q);
        rd = scale * ((std::log(n_dbl) + harm) / (s + 2 * q) +
                      1.0 / ((s + 2 * q) * (s + 2 * q)));
    };

    std::int64_t n_init = std::max<std::int64_t>(
        {cfg.em_cutoff, 20, static_cast<std::int64_t>(std::ceil(3.0 + std::abs(s)))});
    std::int64_t n = std::min<std::int64_t>(n_init, 1 << 20);
    double rv = 0.0, rd = 0.0;
    for (;;) {
        remainder_bounds(static_cast<double>(n), rv, rd);
        if ((rv <= 0.4 * cfg.target_tol && rd <= 0.4 * cfg.target_tol) || n >= (1 << 20))
            break;
        n *= 2;
    }

    const double nd = static_cast<double>(n);
    const double log_n = std::log(nd);

    KahanSum sum, dsum;
    double sum_abs = 0.0;
    for (std::int64_t i = 2; i < n; ++i) {
        double x = std::pow(static_cast<double>(i), -s);
        sum.add(x);
        dsum.add(-std::log(static_cast<double>(i)) * x);
        sum_abs += x * (1.0 + std::log(static_cast<double>(i)));
    }

    const double t = (1.0 - s) * log_n;
    double value = sum.value() + em_pole_part(log_n, t);
    double deriv = dsum.value() + em_pole_part_deriv(log_n, t);

    const double half_pow = 0.5 * std::pow(nd, -s);
    value += half_pow;
    deriv += -log_n * half_pow;

    double poch = s;               // (s)_{2j-1}
    double pw = std::pow(nd, -s - 1.0);
    double harm = 1.0 / s;         // sum_{i=0}^{2j-2} 1/(s+i)
    for (int j = 1; j <= q; ++j) {
        double term = em_coefficient(j) * poch * pw;
        value += term;
        deriv += term * (harm - log_n);
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        pw /= nd * nd;
        harm += 1.0 / (s + 2 * j - 1) + 1.0 / (s + 2 * j);
    }

    const double eps = std::numeric_limits<double>::epsilon();
    const double slack = eps * (sum_abs + 2.0 * std::abs(value) + 2.0 * log_n * log_n + 2.0);

    EmResult r;
    r.value = value;
    r.deriv = deriv;
    r.rem_value = rv + slack;
    r.rem_deriv = rd + slack * (1.0 + log_n);
    r.terms = n;
    return r;
}

inline void check_positive(double s, const char* who) {
    if (!(s > 0.0)) throw domain_error(std::string(who) + ": argument must be positive");
}

}  // namespace detail

// zeta(s) for real s > 0, s != 1.  Assembled from the Euler-Maclaurin F so
// the pole term enters exactly once.
inline EvalResult zeta(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_positive(s, "zeta");
    if (std::abs(s - 1.0) < 1e-12) throw pole_error();
    detail::EmResult em = detail::em_F(s, cfg);
    EvalResult r;
    r.value = em.value + 1.0 + 1.0 / (s - 1.0);
    r.tail_bound = em.rem_value +
                   std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms_used = em.terms;
    return r;
}

// zeta'(s) = F'(s) - 1/(s-1)^2 for real s > 0, s != 1.
inline EvalResult zeta_prime(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_positive(s, "zeta_prime");
    if (std::abs(s - 1.0) < 1e-12) throw pole_error();
    detail::EmResult em = detail::em_F(s, cfg);
    EvalResult r;
    r.value = em.deriv - 1.0 / ((s - 1.0) * (s - 1.0));
    r.tail_bound = em.rem_deriv +
                   std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms_used = em.terms;
    return r;
}

// F(s) = zeta(s) - 1 - 1/(s-1), entire on s > 0 with F(1) = gamma - 1.
inline EvalResult F(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_positive(s, "F");
    detail::EmResult em = detail::em_F(s, cfg);
    return {em.value, em.rem_value, em.terms};
}

inline EvalResult F_prime(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_positive(s, "F_prime");
    detail::EmResult em = detail::em_F(s, cfg);
    return {em.deriv, em.rem_deriv, em.terms};
}

// zeta(s) - 1 without cancellation: for large s the Dirichlet tail is summed
// directly (zeta() - 1 would lose every significant digit there).
inline EvalResult zeta_minus_1(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    detail::check_positive(s, "zeta_minus_1");
    if (s > 40.0) {
        EvalResult r;
        KahanSum acc;
        std::int64_t n = 2;
        for (; n <= 64; ++n) {
            acc.add(std::pow(static_cast<double>(n), -s));
            double tail = std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
            if (tail <= std::max(1e-18, 0.01 * cfg.target_tol)) break;
        }
        r.value = acc.value();
        r.tail_bound = std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0) +
                       4.0 * std::numeric_limits<double>::epsilon() * r.value;
        r.terms_used = n - 1;
        return r;
    }
    EvalResult z = zeta(s, cfg);
    z.value -= 1.0;
    return z;
}

// lambda(s) = sum over odd n of n^{-s} = (1 - 2^{-s}) zeta(s), s > 1.
inline EvalResult lambda(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(s > 1.0)) throw domain_error("lambda: argument must exceed 1");
    EvalResult z = zeta(s, cfg);
    double factor = -std::expm1(-s * std::numbers::ln2);  // 1 - 2^{-s}
    EvalResult r;
    r.value = factor * z.value;
    r.tail_bound = factor * z.tail_bound +
                   2.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms_used = z.terms_used;
    return r;
}

// Lanczos approximation (g = 7, 9 coefficients), |relative error| < 1e-13.
inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("ln_gamma: argument must be positive");
    static constexpr double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps the series argument away from its pole
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               ln_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    double t = z + 7.5;
    return 0.91893853320467274178 /* ln sqrt(2 pi) */ +
           (z + 0.5) * std::log(t) - t + std::log(a);
}

// Exact B_n in lowest terms, memoized; recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0.  B_1 = -1/2, odd n >= 3 give 0.
inline Rational bernoulli(int n) {
    if (n < 0 || n > 200)
        throw domain_error("bernoulli: index must be in [0, 200]");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::scoped_lock lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Rational acc(0);
        BigInt binom = 1;  // C(m+1, 0)
        for (int k = 0; k < m; ++k) {
            acc = acc + Rational(binom) * cache[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        cache.push_back(acc / Rational(-(m + 1)));
    }
    return cache[n];
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// zeta(2j) = c * pi^{2j} with c = (-1)^{j+1} B_{2j} 2^{2j} / (2 (2j)!) exact.
struct ZetaEvenValue {
    Rational coefficient;
    int pi_power = 0;
};

inline ZetaEvenValue zeta_even_exact(int j) {
    if (j < 1 || j > 50)
        throw domain_error("zeta_even_exact: index must be in [1, 50]");
    Rational c = bernoulli(2 * j) * Rational(BigInt(1) << (2 * j), 2 * factorial(2 * j));
    if (j % 2 == 0) c = -c;
    return {c, 2 * j};
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    if (n < 1) throw domain_error("primes_up_to: bound must be positive");
    if (n > 200'000'000)
        throw domain_error("primes_up_to: sieve bound capped at 2e8");
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return primes;
}

// Moebius function by trial division (adequate up to ~1e14).
inline int mobius(std::int64_t n) {
    if (n < 1) throw domain_error("mobius: argument must be positive");
    if (n > 100'000'000'000'000LL)
        throw domain_error("mobius: trial-division implementation capped at 1e14");
    int factors = 0;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

namespace detail {

inline double em_coefficient(int j) {
    static std::mutex mu;
    static std::vector<double> cache;
    std::scoped_lock lock(mu);
    while (static_cast<int>(cache.size()) < j) {
        int jj = static_cast<int>(cache.size()) + 1;
        Rational c = bernoulli(2 * jj) / Rational(factorial(2 * jj));
        cache.push_back(c.to_double());
    }
    return cache[j - 1];
}

}  // namespace detail

}  // namespace azeta::specfun
