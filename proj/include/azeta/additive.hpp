#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "azeta/specfun.hpp"
#include "azeta/types.hpp"

// The arctanh sum h(k) = sum_{n>=2} arctanh(n^{-k}) and its analytic
// structure: direct sum, zeta-series continuation to k > 0, the infinite
// products g and f, poles / residues / Laurent finite parts, the
// polar + holomorphic split, real zeros, and the pole-zero duality.

namespace azeta::additive {

struct PoleDatum {
    std::int64_t m = 0;
    double location = 0.0;   // 1/(2m+1)
    double residue = 0.0;    // 1/(2m+1)^2
    EvalResult finite_part;  // Laurent finite part A_m
};

struct IntervalIndex {
    std::int64_t n = 0;
    double left = 0.0;   // 1/(2n+3)
    double right = 0.0;  // 1/(2n+1)
    double inset = 0.0;  // margin excluded at both ends for root finding
};

struct ZeroDatum {
    std::int64_t n = 0;
    double z = 0.0;
    double zeta_at_zero = 0.0;
    double bisection_width = 0.0;
};

struct DerivativeBounds {
    double polar_lower = 0.0;  // min over I_n of |h_polar'|
    double phi_upper = 0.0;    // max over I_n of |phi'|
};

namespace detail {

constexpr double pole_guard_radius = 1e-9;

inline void guard_near_pole(double k, std::int64_t lowest_m) {
    if (k > 1.0 + pole_guard_radius) return;  // poles lie in (0, 1]
    std::int64_t m0 = std::llround((1.0 / k - 1.0) / 2.0);
    for (std::int64_t m = std::max<std::int64_t>(lowest_m, m0 - 1); m <= m0 + 1; ++m) {
        if (m < lowest_m) continue;
        if (std::abs(k - 1.0 / (2.0 * m + 1.0)) < pole_guard_radius)
            throw near_pole_error(m);
    }
}

// Smallest index M with (2M+1)k >= 3, so that zeta(s)-1 <= 2^{1-s} holds
// for every tail term.
inline std::int64_t min_index_for_geometric_bound(double k) {
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(
        std::ceil((3.0 / k - 1.0) / 2.0)));
}

// Tail of the zeta-series after the terms m < M:
//   sum_{m>=M} [zeta((2m+1)k)-1]/(2m+1) <= 2^{1-(2M+1)k} / ((2M+1)(1-2^{-2k})),
// valid once (2M+1)k >= 3 (so zeta(s)-1 <= 2^{1-s} holds on every tail term);
// below that no finite bound is claimed.
inline double zeta_series_tail_bound(double k, std::int64_t M) {
    if ((2.0 * M + 1.0) * k < 3.0) return std::numeric_limits<double>::infinity();
    double c2k = -std::expm1(-2.0 * k * std::numbers::ln2);  // 1 - 2^{-2k}
    return std::exp2(1.0 - (2.0 * M + 1.0) * k) / ((2.0 * M + 1.0) * c2k);
}

struct SeriesPart {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms = 0;
};

// sum over m in [m_start, m_end) of [zeta((2m+1)k) - 1]/(2m+1), skipping
// skip_m if it falls in range; m_end is chosen from the geometric tail bound.
inline SeriesPart zeta_term_series(double k, std::int64_t m_start, std::int64_t skip_m,
                                   const EvalConfig& cfg) {
    const double tol = cfg.target_tol;
    const double c2k = -std::expm1(-2.0 * k * std::numbers::ln2);
    const std::int64_t floor_end =
        std::max(m_start + 1, min_index_for_geometric_bound(k));

    std::int64_t m_end = floor_end;
    for (int it = 0; it < 6; ++it) {
        double need = 1.0 - std::log2(0.5 * tol * (2.0 * m_end + 1.0) * c2k);
        auto cand = static_cast<std::int64_t>(std::ceil((need / k - 1.0) / 2.0));
        cand = std::max(cand, floor_end);
        if (cand == m_end) break;
        m_end = cand;
    }
    for (int guard = 0; guard < 1000 && zeta_series_tail_bound(k, m_end) > 0.5 * tol;
         ++guard)
        ++m_end;

    std::int64_t wanted = cfg.min_terms;
    if (skip_m >= m_start) ++wanted;  // the skipped index does not count
    m_end = std::max(m_end, m_start + wanted);
    m_end = std::min(m_end, m_start + cfg.max_terms);

    EvalConfig inner = cfg;
    inner.min_terms = 0;
    inner.target_tol = std::max(
        1e-14, 0.25 * tol / (1.0 + 0.5 * std::log(2.0 * static_cast<double>(m_end) + 1.0)));

    KahanSum acc;
    double inner_tails = 0.0;
    double sum_abs = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t m = m_start; m < m_end; ++m) {
        if (m == skip_m) continue;
        double odd = 2.0 * static_cast<double>(m) + 1.0;
        EvalResult zm1 = specfun::zeta_minus_1(odd * k, inner);
        acc.add(zm1.value / odd);
        inner_tails += zm1.tail_bound / odd;
        sum_abs += std::abs(zm1.value) / odd;
        ++terms;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    SeriesPart out;
    out.value = acc.value();
    out.tail_bound = zeta_series_tail_bound(k, m_end) + inner_tails +
                     eps * (2.0 * sum_abs + 2.0 * std::abs(out.value));
    out.terms = terms;
    return out;
}

// Distance from k to the nearest pole 1/(2m+1) with m >= M.
inline double distance_to_tail_poles(double k, std::int64_t M) {
    double k_m = 1.0 / (2.0 * static_cast<double>(M) + 1.0);
    if (k > k_m) return k - k_m;
    std::int64_t m0 = std::max(M, static_cast<std::int64_t>(
        std::llround((1.0 / k - 1.0) / 2.0)));
    double d = std::numeric_limits<double>::infinity();
    for (std::int64_t m = std::max(M, m0 - 1); m <= m0 + 1; ++m)
        d = std::min(d, std::abs(k - 1.0 / (2.0 * m + 1.0)));
    return d;
}

// sum_{n>=M} n^{-s}, s > 1, by Euler-Maclaurin with four corrections.
inline double power_tail_from(double s, double m_from, double& remainder) {
    double value = std::pow(m_from, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m_from, -s);
    double poch = s;
    double pw = std::pow(m_from, -s - 1.0);
    for (int j = 1; j <= 4; ++j) {
        value += specfun::detail::em_coefficient(j) * poch * pw;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        pw /= m_from * m_from;
    }
    const double kappa =
        2.0 * 1.2020569031595943 / std::pow(2.0 * std::numbers::pi, 9.0);
    remainder = kappa * poch * pw * m_from / (s + 8.0);
    return value;
}

}  // namespace detail

// Direct sum over n <= N of arctanh(n^{-k}); k > 1 only.  The tail uses
// arctanh(x) <= x/(1-x) plus integral comparison.
inline EvalResult h_direct(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0 + 1e-6))
        throw domain_error("h_direct: series diverges for k <= 1 (use the continuation)");
    double n_needed = std::pow(0.5 * cfg.target_tol * (k - 1.0), 1.0 / (1.0 - k));
    std::int64_t n_max = cfg.max_terms;
    if (n_needed < static_cast<double>(cfg.max_terms))
        n_max = std::max<std::int64_t>(10, static_cast<std::int64_t>(std::ceil(n_needed)));

    KahanSum acc;
    double sum_abs = 0.0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        double t = std::atanh(std::pow(static_cast<double>(n), -k));
        acc.add(t);
        sum_abs += t;
    }
    double nd = static_cast<double>(n_max);
    double tail = (std::pow(nd, 1.0 - k) / (k - 1.0)) / (1.0 - std::pow(nd, -k));
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), tail + eps * (2.0 * sum_abs + 2.0), n_max - 1};
}

// Continuation of h to k > 0 through the zeta-series
//   h(k) = sum_{m>=0} [zeta((2m+1)k) - 1]/(2m+1);
// for 0 < k < 1 the terms with (2m+1)k < 1 are zeta on (0,1), which is the
// continuation.  Rejects points within 1e-9 of a pole 1/(2m+1).
inline EvalResult h_zeta_series(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 0.0))
        throw domain_error("h_zeta_series: no continuation to Re(k) <= 0");
    detail::guard_near_pole(k, 0);
    detail::SeriesPart s = detail::zeta_term_series(k, 0, -1, cfg);
    return {s.value, s.tail_bound, s.terms};
}

// C(k) = sum_{m>=1} [zeta((2m+1)k) - 1]/(2m+1) = h(k) - (zeta(k) - 1).
// Regular at k = 1.
inline EvalResult C_tail(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 0.0)) throw domain_error("C_tail: requires k > 0");
    detail::guard_near_pole(k, 1);
    detail::SeriesPart s = detail::zeta_term_series(k, 1, -1, cfg);
    return {s.value, s.tail_bound, s.terms};
}

// g(k) = prod_{n>=2} (1 - n^{-k}), k > 1.  Truncated product over n <= N
// with the remaining factors restored through ln(1-x) = -sum_j x^j / j and
// Euler-Maclaurin power-sum tails; the naive product alone converges far too
// slowly (the tail only decays like N^{1-k}).
inline EvalResult g_product(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0 + 1e-6)) throw domain_error("g_product: requires k > 1");
    const std::int64_t n_terms = std::min<std::int64_t>(cfg.max_terms, 4096);

    KahanSum lg;
    double sum_abs = 0.0;
    for (std::int64_t n = 2; n <= n_terms; ++n) {
        double t = std::log1p(-std::pow(static_cast<double>(n), -k));
        lg.add(t);
        sum_abs += -t;
    }

    const double m_from = static_cast<double>(n_terms) + 1.0;
    const double ratio = std::pow(m_from, -k);
    double em_tails = 0.0;
    double trunc = 0.0;
    for (int j = 1;; ++j) {
        double rem;
        double tj = detail::power_tail_from(j * k, m_from, rem);
        double rest = tj / (j * (1.0 - ratio));
        if (rest <= 1e-17 * (1.0 + std::abs(lg.value())) || j > 200) {
            trunc = rest;
            break;
        }
        lg.add(-tj / j);
        em_tails += rem / j;
        sum_abs += tj / j;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    double log_err = trunc + em_tails + eps * (2.0 * sum_abs + 2.0);
    double value = std::exp(lg.value());
    return {value, value * log_err * (1.0 + log_err), n_terms - 1};
}

// f(k) = prod_{n>=1} (1 + n^{-k}), k > 1; same scheme with alternating
// power-sum corrections.  The identity f = 2 g(2k)/g(k) is kept as a test.
inline EvalResult f_product(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0 + 1e-6)) throw domain_error("f_product: requires k > 1");
    const std::int64_t n_terms = std::min<std::int64_t>(cfg.max_terms, 4096);

    KahanSum lg;
    double sum_abs = 0.0;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        double t = std::log1p(std::pow(static_cast<double>(n), -k));
        lg.add(t);
        sum_abs += t;
    }

    const double m_from = static_cast<double>(n_terms) + 1.0;
    const double ratio = std::pow(m_from, -k);
    double em_tails = 0.0;
    double trunc = 0.0;
    for (int j = 1;; ++j) {
        double rem;
        double tj = detail::power_tail_from(j * k, m_from, rem);
        double rest = tj / (j * (1.0 - ratio));
        if (rest <= 1e-17 * (1.0 + std::abs(lg.value())) || j > 200) {
            trunc = rest;
            break;
        }
        lg.add((j % 2 == 1 ? tj : -tj) / j);
        em_tails += rem / j;
        sum_abs += tj / j;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    double log_err = trunc + em_tails + eps * (2.0 * sum_abs + 2.0);
    double value = std::exp(lg.value());
    return {value, value * log_err * (1.0 + log_err), n_terms};
}

// Pole location, residue, and Laurent finite part
//   A_m = (gamma - 1)/(2m+1) + sum_{j != m} [zeta((2j+1)/(2m+1)) - 1]/(2j+1).
inline PoleDatum pole_data(std::int64_t m, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (m < 0) throw domain_error("pole_data: index must be nonnegative");
    double odd = 2.0 * static_cast<double>(m) + 1.0;
    PoleDatum p;
    p.m = m;
    p.location = 1.0 / odd;
    p.residue = 1.0 / (odd * odd);
    detail::SeriesPart s = detail::zeta_term_series(p.location, 0, m, cfg);
    p.finite_part.value = (euler_gamma - 1.0) / odd + s.value;
    p.finite_part.tail_bound = s.tail_bound;
    p.finite_part.terms_used = s.terms;
    return p;
}

// Partial residue sum sum_{m<M} (2m+1)^{-2}, increasing to pi^2/8.
inline double residue_sum_partial(std::int64_t M) {
    if (M < 1) throw domain_error("residue_sum_partial: M must be positive");
    KahanSum acc;
    for (std::int64_t m = M - 1; m >= 0; --m) {
        double odd = 2.0 * static_cast<double>(m) + 1.0;
        acc.add(1.0 / (odd * odd));
    }
    return acc.value();
}

// Truncated polar part sum_{m<M} (2m+1)^{-2} / (k - 1/(2m+1)).  Tail bound
// 1/(4 M dist) where dist is the distance from k to the omitted poles; the
// 1/M decay means small tolerances need M ~ 1/(tol * k).
inline EvalResult h_polar(double k, std::int64_t M, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 0.0)) throw domain_error("h_polar: requires k > 0");
    if (M < 1) throw domain_error("h_polar: M must be positive");
    detail::guard_near_pole(k, 0);

    KahanSum acc;
    for (std::int64_t m = 0; m < M; ++m) {
        double odd = 2.0 * static_cast<double>(m) + 1.0;
        // (2m+1)^{-2} / (k - 1/(2m+1)) = 1 / ((2m+1) ((2m+1)k - 1))
        acc.add(1.0 / (odd * (odd * k - 1.0)));
    }
    double dist = detail::distance_to_tail_poles(k, M);
    double tail = 1.0 / (4.0 * static_cast<double>(M) * dist);
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), tail + eps * (8.0 + 2.0 * std::abs(acc.value())), M};
}

// Holomorphic remainder phi(k) = sum_{m>=0} F((2m+1)k)/(2m+1), k > 0.
// F(s) itself decays only like -1/(s-1), so the truncation tail is dominated
// by the omitted polar terms (bounded as in h_polar) plus the geometric
// zeta(s)-1 part; a pure 2^{-s} envelope for F does not exist.  Terms with
// (2m+1)k > 60 use F(s) = -1/(s-1) exactly to binary64 (|zeta(s)-1| < 2^-59).
inline EvalResult phi(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 0.0)) throw domain_error("phi: defined only for k > 0");

    const double wanted = 1.0 / (2.0 * k * cfg.target_tol);
    std::int64_t M = cfg.max_terms;
    if (wanted < static_cast<double>(cfg.max_terms))
        M = static_cast<std::int64_t>(std::ceil(wanted));
    M = std::max({M, detail::min_index_for_geometric_bound(k), cfg.min_terms});
    M = std::min(M, cfg.max_terms);

    EvalConfig inner = cfg;
    inner.min_terms = 0;
    inner.target_tol = std::max(1e-14, 0.05 * cfg.target_tol);

    constexpr double s_split = 60.0;
    KahanSum acc;
    double inner_tails = 0.0;
    std::int64_t m = 0;
    for (; m < M; ++m) {
        double odd = 2.0 * static_cast<double>(m) + 1.0;
        double s = odd * k;
        if (s > s_split) break;
        EvalResult f = specfun::F(s, inner);
        acc.add(f.value / odd);
        inner_tails += f.tail_bound / odd;
    }
    for (; m < M; ++m) {
        double odd = 2.0 * static_cast<double>(m) + 1.0;
        acc.add(-1.0 / (odd * (odd * k - 1.0)));
    }
    inner_tails += 1e-16;  // covers the dropped zeta(s)-1 <= 2^{1-s}, s > 60

    double dist = detail::distance_to_tail_poles(k, M);
    double tail = 1.0 / (4.0 * static_cast<double>(M) * dist) +
                  detail::zeta_series_tail_bound(k, M);
    const double eps = std::numeric_limits<double>::epsilon();
    return {acc.value(), tail + inner_tails + eps * (8.0 + 2.0 * std::abs(acc.value())), M};
}

// Large-k expansion h_polar(k) = sum_{n>=0} lambda(n+2)/k^{n+1}, k > 1.
inline double h_polar_asymptotic(double k, int n_terms, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 1.0)) throw domain_error("h_polar_asymptotic: requires k > 1");
    if (n_terms < 1) throw domain_error("h_polar_asymptotic: need at least one term");
    KahanSum acc;
    double kp = k;
    for (int n = 0; n < n_terms; ++n) {
        acc.add(specfun::lambda(static_cast<double>(n) + 2.0, cfg).value / kp);
        kp *= k;
    }
    return acc.value();
}

inline IntervalIndex interval_index(std::int64_t n, double inset_scale = 1e-9) {
    if (n < 0) throw domain_error("interval_index: n must be nonnegative");
    IntervalIndex iv;
    iv.n = n;
    iv.left = 1.0 / (2.0 * static_cast<double>(n) + 3.0);
    iv.right = 1.0 / (2.0 * static_cast<double>(n) + 1.0);
    double width = iv.right - iv.left;
    // the inset must clear the near-pole guard radius at both endpoints
    iv.inset = std::max(inset_scale * width, 2.0 * detail::pole_guard_radius);
    if (!(iv.inset < 0.25 * width))
        throw domain_error("interval_index: inset must stay below width/4");
    return iv;
}

// Bisection for the unique zero of h in I_n; h decreases from +inf at the
// left endpoint to -inf at the right endpoint.
inline ZeroDatum find_zero(const IntervalIndex& iv, const EvalConfig& cfg = {}) {
    cfg.validate();
    double lo = iv.left + iv.inset;
    double hi = iv.right - iv.inset;
    double f_lo = h_zeta_series(lo, cfg).value;
    double f_hi = h_zeta_series(hi, cfg).value;
    if (!(f_lo > 0.0 && f_hi < 0.0))
        throw no_sign_change_error(
            "find_zero: endpoint evaluations do not straddle zero (inset too "
            "large or tolerance too loose)");

    int iterations = 0;
    while (hi - lo > 1e-10 && iterations < 60) {
        double mid = 0.5 * (lo + hi);
        double f_mid = h_zeta_series(mid, cfg).value;
        if (f_mid > 0.0)
            lo = mid;
        else
            hi = mid;
        ++iterations;
    }

    ZeroDatum zd;
    zd.n = iv.n;
    zd.z = 0.5 * (lo + hi);
    zd.bisection_width = hi - lo;
    zd.zeta_at_zero = specfun::zeta(zd.z, cfg).value;
    return zd;
}

inline ZeroDatum find_zero(std::int64_t n, const EvalConfig& cfg = {}) {
    return find_zero(interval_index(n), cfg);
}

// Bounds used in the zero-uniqueness argument: a lower bound for |h_polar'|
// on I_n from the two adjacent poles, and an upper bound for |phi'| from the
// split |F'(s)| <= 5/18 on (0,2] and |F'(s)| <= (2 ln2 + 2) 2^{-s} beyond.
inline DerivativeBounds derivative_bounds(std::int64_t n) {
    if (n < 0) throw domain_error("derivative_bounds: n must be nonnegative");
    double a = 2.0 * static_cast<double>(n) + 1.0;
    double b = 2.0 * static_cast<double>(n) + 3.0;
    double r_n = 1.0 / (a * a);
    double r_n1 = 1.0 / (b * b);
    double ell = 2.0 / (a * b);
    double croot = std::cbrt(r_n) + std::cbrt(r_n1);
    DerivativeBounds d;
    d.polar_lower = croot * croot * croot / (ell * ell);
    double geo = -std::expm1(-(2.0 / b) * std::numbers::ln2);  // 1 - 2^{-2/(2n+3)}
    d.phi_upper = 5.0 * b / 18.0 + (2.0 * std::numbers::ln2 + 2.0) * 0.25 / geo;
    return d;
}

// zeta(k) - 1 + C(k) - h(k); identically zero where defined, and at a zero
// z of h it reduces to zeta(z) - (1 - C(z)).
inline double duality_residual(double k, const EvalConfig& cfg = {}) {
    cfg.validate();
    if (!(k > 0.0)) throw domain_error("duality_residual: requires k > 0");
    if (std::abs(k - 1.0) < 1e-12) throw pole_error();
    detail::guard_near_pole(k, 0);
    return specfun::zeta_minus_1(k, cfg).value + C_tail(k, cfg).value -
           h_zeta_series(k, cfg).value;
}

}  // namespace azeta::additive
