#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "azeta/additive.hpp"
#include "azeta/hadamard.hpp"
#include "azeta/multiplicative.hpp"
#include "azeta/specfun.hpp"
#include "azeta/types.hpp"

// One-shot verification suite: every acceptance criterion as a pass/fail
// check with its tolerance pinned in code.  Used by `azeta verify` and by
// the standalone acceptance runner.

namespace azeta::verify {

struct CriterionResult {
    int index = 0;
    std::string suite;  // additive | multiplicative | hadamard
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

class Collector {
public:
    void expect_close(const std::string& what, double value, double target, double tol) {
        bool ok = std::isfinite(value) && std::abs(value - target) <= tol;
        note(what + "=" + fmt(value) + " want " + fmt(target) + "+-" + fmt(tol), ok);
    }
    void expect_le(const std::string& what, double value, double bound) {
        bool ok = std::isfinite(value) && value <= bound;
        note(what + "=" + fmt(value) + " <= " + fmt(bound), ok);
    }
    void expect_true(const std::string& what, bool ok) { note(what, ok); }
    void info(const std::string& what) { note(what, true); }

    bool pass() const { return pass_; }
    std::string detail() const { return detail_.str(); }

private:
    void note(const std::string& msg, bool ok) {
        if (count_++) detail_ << "; ";
        detail_ << msg;
        if (!ok) detail_ << " [FAIL]";
        pass_ = pass_ && ok;
    }
    bool pass_ = true;
    int count_ = 0;
    std::ostringstream detail_;
};

inline CriterionResult make(int index, const std::string& suite, const std::string& name,
                            const Collector& col) {
    return {index, suite, name, col.pass(), col.detail()};
}

}  // namespace detail

// 1. h(1/2) from the zeta-series continuation with at least 200 terms.
inline CriterionResult criterion_1() {
    detail::Collector col;
    EvalConfig cfg;
    cfg.target_tol = 1e-4;
    cfg.min_terms = 200;
    EvalResult h = additive::h_zeta_series(0.5, cfg);
    col.expect_close("h(1/2)", h.value, -1.8265, 5e-4);
    col.expect_true("terms>=200 (" + std::to_string(h.terms_used) + ")",
                    h.terms_used >= 200);
    return detail::make(1, "additive", "h(1/2) via zeta-series continuation", col);
}

// 2. First six real zeros of h and the zeta values there.
inline CriterionResult criterion_2() {
    static constexpr double z_ref[6] = {0.387942, 0.215696, 0.150018,
                                        0.115142, 0.093470, 0.078683};
    static constexpr double zeta_ref[6] = {-1.1029, -0.7577, -0.6644,
                                           -0.6208, -0.5956, -0.5790};
    detail::Collector col;
    EvalConfig cfg;
    for (int n = 0; n < 6; ++n) {
        additive::ZeroDatum z = additive::find_zero(n, cfg);
        col.expect_close("z_" + std::to_string(n), z.z, z_ref[n], 1e-5);
        col.expect_close("zeta(z_" + std::to_string(n) + ")", z.zeta_at_zero,
                         zeta_ref[n], 1e-3);
    }
    return detail::make(2, "additive", "zeros table n=0..5", col);
}

// 3. Laurent data: A_0, A_1, and the residue at k=1.
inline CriterionResult criterion_3() {
    detail::Collector col;
    EvalConfig cfg;
    col.expect_close("A_0", additive::pole_data(0, cfg).finite_part.value,
                     -0.5 * std::log(2.0), 1e-9);
    col.expect_close("A_1", additive::pole_data(1, cfg).finite_part.value, -1.788, 1e-2);
    double k = 1.0 + 1e-6;
    col.expect_close("(k-1)h(k) at k=1+1e-6",
                     (k - 1.0) * additive::h_zeta_series(k, cfg).value, 1.0, 1e-6);
    return detail::make(3, "additive", "Laurent data at k=1", col);
}

// 4. Mittag-Leffler split at k=5 with matched truncations.
inline CriterionResult criterion_4() {
    detail::Collector col;
    EvalConfig cfg;
    const std::int64_t big = 100'000'000;
    EvalResult polar = additive::h_polar(5.0, big, cfg);
    EvalConfig cphi = cfg;
    cphi.target_tol = 1e-10;
    cphi.max_terms = big;
    EvalResult hol = additive::phi(5.0, cphi);
    EvalResult h = additive::h_zeta_series(5.0, cfg);
    col.expect_close("h_polar(5)", polar.value, 0.2989, 1e-3);
    col.expect_close("phi(5)", hol.value, -0.2619, 1e-3);
    col.expect_close("h_polar+phi-h", polar.value + hol.value - h.value, 0.0, 1e-9);
    return detail::make(4, "additive", "Mittag-Leffler split at k=5", col);
}

// 5. Exact rationals r_1..r_4 and the even special values.
inline CriterionResult criterion_5() {
    detail::Collector col;
    const Rational expected[4] = {Rational(5, 2), Rational(7, 6), Rational(715, 691),
                                  Rational(7293, 7234)};
    static constexpr double hp_ref[4] = {0.45815, 0.07708, 0.01707, 0.00408};
    for (int j = 1; j <= 4; ++j) {
        multiplicative::EvenValue v = multiplicative::r_exact(j);
        col.expect_true("r_" + std::to_string(j) + "=" + v.r.str(),
                        v.r == expected[j - 1]);
        col.expect_close("h_p(" + std::to_string(2 * j) + ")", v.hp_value,
                         hp_ref[j - 1], 1e-5);
    }
    return detail::make(5, "multiplicative", "exact even values r_j and h_p(2j)", col);
}

// 6. Moebius inversion reconstructing zeta(3) - 1 from h.
inline CriterionResult criterion_6() {
    detail::Collector col;
    EvalConfig cfg;
    col.expect_close("h(3) vs ln(3/2)/2", additive::h_zeta_series(3.0, cfg).value,
                     0.5 * std::log(1.5), 1e-12);
    EvalResult inv = multiplicative::mobius_invert_h(3.0, 11, cfg);
    double target = specfun::zeta_minus_1(3.0, cfg).value;
    col.expect_close("mobius(k=3,D=11) vs zeta(3)-1", inv.value, target, 1e-11);
    return detail::make(6, "multiplicative", "Moebius inversion at k=3, D=11", col);
}

// 7. Dyadic formula for ln zeta: value and doubly exponential error decay.
inline CriterionResult criterion_7() {
    detail::Collector col;
    EvalConfig cfg;
    double ref = multiplicative::ln_zeta(2.0, cfg).value;
    col.expect_le("|dyadic(2,J=4) - ln zeta(2)|",
                  std::abs(multiplicative::ln_zeta_dyadic(2.0, 4, cfg).value - ref), 1e-9);
    double err_prev = 0.0;
    for (int levels = 1; levels <= 4; ++levels) {
        double err = std::abs(multiplicative::ln_zeta_dyadic(2.0, levels, cfg).value - ref);
        if (levels > 1 && err > 1e-13)
            col.expect_le("err(J=" + std::to_string(levels) + ")", err,
                          err_prev * err_prev * 1e3);
        err_prev = err;
    }
    return detail::make(7, "multiplicative", "dyadic formula for ln zeta(2)", col);
}

// 8. Dyadic defect identities for g and zeta.
inline CriterionResult criterion_8() {
    detail::Collector col;
    EvalConfig cfg;
    for (double k : {2.0, 3.0}) {
        double g1 = additive::g_product(k, cfg).value;
        double g2 = additive::g_product(2.0 * k, cfg).value;
        double h = additive::h_zeta_series(k, cfg).value;
        col.expect_close("g(2k)-g(k)^2 e^{2h} at k=" + detail::fmt(k),
                         g2 - g1 * g1 * std::exp(2.0 * h), 0.0, 1e-10);
        double z1 = specfun::zeta(k, cfg).value;
        double z2 = specfun::zeta(2.0 * k, cfg).value;
        double hp = multiplicative::hp_closed(k, cfg).value;
        col.expect_close("zeta(2k)-zeta(k)^2 e^{-2hp} at k=" + detail::fmt(k),
                         z2 - z1 * z1 * std::exp(-2.0 * hp), 0.0, 1e-10);
    }
    return detail::make(8, "multiplicative", "dyadic defect identities", col);
}

// 9. Hadamard closure over the bundled zeros, residual shrinkage, and the
// per-term decay slope.
inline CriterionResult criterion_9(const hadamard::ZeroTable& table) {
    detail::Collector col;
    EvalConfig cfg;
    double hp = multiplicative::hp_closed(2.0, cfg).value;
    double e2 = hadamard::E(2.0);
    hadamard::ZeroSumResult full = hadamard::zero_sum_hp(2.0, table);
    double resid_full = hp - e2 - full.value;
    col.expect_le("|h_p(2)-E(2)-zero_sum|", std::abs(resid_full), full.tail_estimate);

    hadamard::ZeroTable head = table;
    if (head.count > 25) {
        head.ordinates.resize(25);
        head.count = 25;
    }
    double resid_head = hp - e2 - hadamard::zero_sum_hp(2.0, head).value;
    col.expect_true("|resid(" + std::to_string(table.count) + ")|=" +
                        detail::fmt(std::abs(resid_full)) + " < |resid(25)|=" +
                        detail::fmt(std::abs(resid_head)),
                    std::abs(resid_full) < std::abs(resid_head));

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n_fit = 0;
    for (std::size_t i = table.ordinates.size() - 5; i < table.ordinates.size(); ++i) {
        double g = table.ordinates[i];
        double t = std::abs(hadamard::zero_pair_term(2.0, g));
        sx += std::log(g);
        sy += std::log(t);
        sxx += std::log(g) * std::log(g);
        sxy += std::log(g) * std::log(t);
        ++n_fit;
    }
    double slope = (n_fit * sxy - sx * sy) / (n_fit * sxx - sx * sx);
    col.expect_le("log-log term slope", slope, -1.9);
    return detail::make(9, "hadamard", "zero-sum closure for h_p(2)", col);
}

// 10. h_p' explicit formula against central differences of hp_closed.
inline CriterionResult criterion_10(const hadamard::ZeroTable& table) {
    detail::Collector col;
    EvalConfig cfg;
    for (double k : {2.0, 3.0}) {
        hadamard::ZeroSumResult ex = hadamard::hp_prime_explicit(k, table);
        const double step = 1e-5;
        double fd = (multiplicative::hp_closed(k + step, cfg).value -
                     multiplicative::hp_closed(k - step, cfg).value) /
                    (2.0 * step);
        col.expect_le("|hp'(" + detail::fmt(k) + ") explicit-fd|",
                      std::abs(ex.value - fd), std::max(1e-6, ex.tail_estimate));
    }
    return detail::make(10, "hadamard", "h_p' explicit formula vs finite differences", col);
}

// 11. Property suites: monotone decrease on I_n, derivative-bound gap,
// |F'| on (0,2], residue partial sums, and the zero asymptotics constant.
inline CriterionResult criterion_11() {
    detail::Collector col;
    EvalConfig cfg;

    bool monotone = true;
    for (int n = 0; n <= 10 && monotone; ++n) {
        additive::IntervalIndex iv = additive::interval_index(n);
        double lo = iv.left + iv.inset, hi = iv.right - iv.inset;
        double prev = additive::h_zeta_series(lo, cfg).value;
        for (int i = 1; i < 50; ++i) {
            double k = lo + (hi - lo) * i / 49.0;
            double cur = additive::h_zeta_series(k, cfg).value;
            if (!(cur < prev)) {
                monotone = false;
                break;
            }
            prev = cur;
        }
    }
    col.expect_true("h strictly decreasing on I_n, n<=10, 50 samples", monotone);

    bool gap = true;
    double min_ratio = 1e300;
    for (int n = 0; n <= 50; ++n) {
        additive::DerivativeBounds b = additive::derivative_bounds(n);
        gap = gap && (b.polar_lower > b.phi_upper);
        min_ratio = std::min(min_ratio, b.polar_lower / b.phi_upper);
    }
    col.expect_true("polar_lower > phi_upper for n=0..50 (min ratio " +
                        detail::fmt(min_ratio) + ")",
                    gap);

    double worst_fp = 0.0;
    for (int i = 1; i <= 200; ++i) {
        double s = 2.0 * i / 200.0;
        worst_fp = std::max(worst_fp, std::abs(specfun::F_prime(s, cfg).value));
    }
    col.expect_le("max |F'(s)| on (0,2]", worst_fp, 5.0 / 18.0 + 1e-9);

    col.expect_close("residue partial sum M=1e6", additive::residue_sum_partial(1'000'000),
                     std::numbers::pi * std::numbers::pi / 8.0, 5e-7);

    EvalConfig zcfg;
    zcfg.target_tol = 1e-11;
    double c_fit = 0.0;
    for (int n = 5; n <= 30; ++n) {
        additive::ZeroDatum z = additive::find_zero(n, zcfg);
        double nd = static_cast<double>(n);
        c_fit = std::max(c_fit, nd * nd * nd * std::abs(z.z - 1.0 / (2.0 * nd + 2.0)));
    }
    col.expect_le("fitted C in |z_n - 1/(2n+2)| <= C/n^3 (n=5..30)", c_fit, 20.0);
    return detail::make(11, "additive", "property suites", col);
}

// 12. Cross-agreement of the three h representations and of the two h_p
// evaluations, within combined reported tail bounds.
inline CriterionResult criterion_12() {
    detail::Collector col;
    EvalConfig cfg;
    for (double k : {2.0, 3.0, 5.0}) {
        EvalResult direct = additive::h_direct(k, cfg);
        EvalResult series = additive::h_zeta_series(k, cfg);
        EvalResult g1 = additive::g_product(k, cfg);
        EvalResult g2 = additive::g_product(2.0 * k, cfg);
        double closed = 0.5 * std::log(g2.value / (g1.value * g1.value));
        double closed_tail = 0.5 * (g2.tail_bound / g2.value) + g1.tail_bound / g1.value;
        col.expect_le("|h_direct-h_series| k=" + detail::fmt(k),
                      std::abs(direct.value - series.value),
                      direct.tail_bound + series.tail_bound + 1e-12);
        col.expect_le("|closed-h_series| k=" + detail::fmt(k),
                      std::abs(closed - series.value),
                      closed_tail + series.tail_bound + 1e-12);
        col.expect_le("|h_direct-closed| k=" + detail::fmt(k),
                      std::abs(direct.value - closed),
                      direct.tail_bound + closed_tail + 1e-12);
    }
    for (double k : {2.0, 4.0}) {
        EvalResult direct = multiplicative::hp_direct(k, 1'000'000, cfg);
        EvalResult closed = multiplicative::hp_closed(k, cfg);
        col.expect_le("|hp_direct-hp_closed| k=" + detail::fmt(k),
                      std::abs(direct.value - closed.value),
                      direct.tail_bound + closed.tail_bound + 1e-12);
    }
    return detail::make(12, "additive", "representation cross-agreement", col);
}

inline std::vector<CriterionResult> run(const std::string& suite,
                                        const std::string& zeros_path) {
    std::vector<CriterionResult> results;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("additive")) {
        results.push_back(criterion_1());
        results.push_back(criterion_2());
        results.push_back(criterion_3());
        results.push_back(criterion_4());
    }
    if (want("multiplicative")) {
        results.push_back(criterion_5());
        results.push_back(criterion_6());
        results.push_back(criterion_7());
        results.push_back(criterion_8());
    }
    if (want("hadamard")) {
        hadamard::ZeroTable table = hadamard::load_zeros(zeros_path);
        results.push_back(criterion_9(table));
        results.push_back(criterion_10(table));
    }
    if (want("additive")) {
        results.push_back(criterion_11());
        results.push_back(criterion_12());
    }
    return results;
}

inline std::string format_line(const CriterionResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "%s  %2d  ", r.pass ? "PASS" : "FAIL", r.index);
    return std::string(head) + "[" + r.suite + "] " + r.name + "\n      " + r.detail + "\n";
}

inline int print_report(const std::vector<CriterionResult>& results, std::FILE* out) {
    int failures = 0;
    for (const auto& r : results) {
        failures += r.pass ? 0 : 1;
        std::fputs(format_line(r).c_str(), out);
    }
    std::fprintf(out, "%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                 results.size());
    return failures;
}

}  // namespace azeta::verify
