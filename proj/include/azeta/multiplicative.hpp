#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "azeta/additive.hpp"
#include "azeta/rational.hpp"
#include "azeta/specfun.hpp"
#include "azeta/types.hpp"

// The prime-restricted function h_p(k) = sum_p arctanh(p^{-k}), its closed
// form ln zeta(k) - ln zeta(2k)/2, the exact rationals r_j = zeta(2j)^2 /
// zeta(4j), the composite remainder, the prime zeta function, the dyadic
// formula for ln zeta, and Moebius inversion recovering zeta(k) - 1 from h.

namespace azeta::multiplicative {

struct EvenValue {
    std::int64_t j = 0;
    Rational r;              // zeta(2j)^2 / zeta(4j), exact
    double hp_value = 0.0;   // h_p(2j) = ln(r)/2
};

// ln zeta(s) for s > 1, built on zeta(s) - 1 so large arguments keep their
// significant digits.
inline EvalResult ln_zeta(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(s > 1.0)) throw domain_error("ln_zeta: requires s > 1");
    EvalResult zm1 = specfun::zeta_minus_1(s, cfg);
    EvalResult r;
    r.value = std::log1p(zm1.value);
    double denom = std::max(0.5, 1.0 + zm1.value - zm1.tail_bound);
    r.tail_bound = zm1.tail_bound / denom +
                   std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms_used = zm1.terms_used;
    return r;
}

// Direct prime sum over p <= P_max; the tail is bounded by the all-integer
// tail (primes are a subseries of positive terms).
inline EvalResult hp_direct(double k, std::int64_t p_max, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0 + 1e-6)) throw domain_error("hp_direct: requires k > 1");
    if (p_max < 2) throw domain_error("hp_direct: P_max must be at least 2");
    auto primes = specfun::primes_up_to(p_max);
    KahanSum acc;
    double sum_abs = 0.0;
    for (std::int64_t p : primes) {
        double t = std::atanh(std::pow(static_cast<double>(p), -k));
        acc.add(t);
        sum_abs += t;
    }
    double nd = static_cast<double>(p_max);
    double tail = (std::pow(nd, 1.0 - k) / (k - 1.0)) / (1.0 - std::pow(nd, -k));
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), tail + eps * (2.0 * sum_abs + 2.0),
            static_cast<std::int64_t>(primes.size())};
}

// h_p(k) = ln zeta(k) - ln zeta(2k)/2, the canonical evaluation for k > 1.
inline EvalResult hp_closed(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0)) throw domain_error("hp_closed: requires k > 1");
    EvalResult a = ln_zeta(k, cfg);
    EvalResult b = ln_zeta(2.0 * k, cfg);
    EvalResult r;
    r.value = a.value - 0.5 * b.value;
    r.tail_bound = a.tail_bound + 0.5 * b.tail_bound +
                   std::numeric_limits<double>::epsilon() * std::abs(r.value);
    r.terms_used = a.terms_used + b.terms_used;
    return r;
}

// Exact r_j = zeta(2j)^2 / zeta(4j); the powers of pi cancel by construction.
inline EvenValue r_exact(std::int64_t j) {
    if (j < 1 || j > 25) throw domain_error("r_exact: index must be in [1, 25]");
    auto c2 = specfun::zeta_even_exact(static_cast<int>(j));
    auto c4 = specfun::zeta_even_exact(static_cast<int>(2 * j));
    EvenValue v;
    v.j = j;
    v.r = c2.coefficient * c2.coefficient / c4.coefficient;
    v.hp_value = 0.5 * v.r.log_abs();
    return v;
}

// Composite contribution h_comp(k) = h(k) - h_p(k) >= 0.
inline EvalResult h_comp(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0 + 1e-6)) throw domain_error("h_comp: requires k > 1");
    EvalResult h = additive::h_zeta_series(k, cfg);
    EvalResult hp = hp_closed(k, cfg);
    return {h.value - hp.value, h.tail_bound + hp.tail_bound,
            h.terms_used + hp.terms_used};
}

// Prime zeta P(s) = sum_p p^{-s} through P(s) = sum_n mu(n) ln zeta(ns)/n,
// truncated with the geometric bound |ln zeta(ns)| <= 2^{1-ns}.
inline EvalResult prime_zeta(double s, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(s > 1.0)) throw domain_error("prime_zeta: requires s > 1");

    const double c = -std::expm1(-s * std::numbers::ln2);  // 1 - 2^{-s}
    auto tail_after = [&](std::int64_t n) {
        return std::exp2(1.0 - (static_cast<double>(n) + 1.0) * s) /
               ((static_cast<double>(n) + 1.0) * c);
    };
    std::int64_t n_end = std::max<std::int64_t>(1, static_cast<std::int64_t>(
        std::ceil(3.0 / s)));
    while (tail_after(n_end) > 0.5 * cfg.target_tol && n_end < cfg.max_terms) ++n_end;

    EvalConfig inner = cfg;
    inner.min_terms = 0;
    inner.target_tol = std::max(1e-14, 0.25 * cfg.target_tol);

    KahanSum acc;
    double inner_tails = 0.0;
    std::int64_t used = 0;
    for (std::int64_t n = 1; n <= n_end; ++n) {
        int mu = specfun::mobius(n);
        if (mu == 0) continue;
        EvalResult lz = ln_zeta(static_cast<double>(n) * s, inner);
        acc.add(mu * lz.value / static_cast<double>(n));
        inner_tails += lz.tail_bound / static_cast<double>(n);
        ++used;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(),
            tail_after(n_end) + inner_tails + eps * (2.0 + 2.0 * std::abs(acc.value())),
            used};
}

// Dyadic formula ln zeta(k) = sum_{j>=0} 2^{-j} h_p(2^j k); doubly
// exponential tail 2^{-J} ln zeta(2^J k) <= 2^{1-J-2^J k}.
inline EvalResult ln_zeta_dyadic(double k, int levels, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0)) throw domain_error("ln_zeta_dyadic: requires k > 1");
    if (levels < 1 || levels > 40)
        throw domain_error("ln_zeta_dyadic: J must be in [1, 40]");
    KahanSum acc;
    double inner_tails = 0.0;
    double weight = 1.0;
    double arg = k;
    for (int j = 0; j < levels; ++j) {
        EvalResult hp = hp_closed(arg, cfg);
        acc.add(weight * hp.value);
        inner_tails += weight * hp.tail_bound;
        weight *= 0.5;
        arg *= 2.0;
    }
    double trunc = std::exp2(1.0 - levels - std::exp2(static_cast<double>(levels)) * k);
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), trunc + inner_tails + eps * (2.0 + 2.0 * std::abs(acc.value())),
            levels};
}

// Moebius inversion over the odd divisibility poset:
//   zeta(k) - 1 = sum_{d odd} mu(d)/d h(dk),
// truncated at D with tail 2^{1-(D+2)k} / (1 - 2^{-2k}).
inline EvalResult mobius_invert_h(double k, std::int64_t d_max, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (d_max < 1 || d_max % 2 == 0)
        throw domain_error("mobius_invert_h: D must be a positive odd integer");
    if (!(k > 1.0)) throw domain_error("mobius_invert_h: requires k > 1");

    // inner tolerance independent of D, so partial sums over nested D agree
    // on their shared terms; sum_{d odd} 1/d stays below ~4 at desk scale
    EvalConfig inner = cfg;
    inner.min_terms = 0;
    inner.target_tol = std::max(1e-14, cfg.target_tol / 16.0);
    KahanSum acc;
    double inner_tails = 0.0;
    std::int64_t used = 0;
    for (std::int64_t d = 1; d <= d_max; d += 2) {
        int mu = specfun::mobius(d);
        if (mu == 0) continue;
        EvalResult h = additive::h_zeta_series(static_cast<double>(d) * k, inner);
        acc.add(mu * h.value / static_cast<double>(d));
        inner_tails += h.tail_bound / static_cast<double>(d);
        ++used;
    }
    double c2k = -std::expm1(-2.0 * k * std::numbers::ln2);
    double trunc = std::exp2(1.0 - (static_cast<double>(d_max) + 2.0) * k) / c2k;
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), trunc + inner_tails + eps * (2.0 + 2.0 * std::abs(acc.value())),
            used};
}

}  // namespace azeta::multiplicative
