#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "azeta/multiplicative.hpp"
#include "azeta/specfun.hpp"
#include "azeta/types.hpp"

// The zero-sum side of the theory: ingest ordinates of nontrivial zeta
// zeros, evaluate the elementary factor E(k), the absolutely convergent
// zero sums for h_p(k) and h_p'(k), and the family of identities
// ln(r_j)/2 = zero_sum(2j) + E(2j).
//
// Conjugate pairs are combined analytically, so all public results are
// real-typed: with rho = 1/2 + i*gamma and D = 1/4 + gamma^2,
//   |1 - k/rho|^2 = 1 + (k^2 - k)/D,
// hence each gamma contributes
//   log1p((k^2 - k)/D) - log1p((4k^2 - 2k)/D)/2.

namespace azeta::hadamard {

struct ZeroTable {
    std::vector<double> ordinates;  // strictly increasing, all > 14
    std::string source;
    std::int64_t count = 0;
};

struct ZeroSumResult {
    double value = 0.0;
    std::int64_t zeros_used = 0;
    double tail_estimate = 0.0;  // heuristic, from the N(T) density; not rigorous
};

namespace detail {

// Fitted constant in the tail estimate c * k^2 (ln(T/2pi)+1) / (2 pi T);
// the density main term gives c = 1, the factor 2 absorbs the observed
// spread on the bundled table.  Heuristic, not a proven bound.
constexpr double tail_fit_constant = 2.0;

inline double zero_density_tail(double coeff, double t_max) {
    return tail_fit_constant * coeff *
           (std::log(t_max / (2.0 * std::numbers::pi)) + 1.0) /
           (2.0 * std::numbers::pi * t_max);
}

inline int significant_digits(const std::string& token) {
    int digits = 0;
    bool leading = true;
    for (char ch : token) {
        if (ch == 'e' || ch == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
        if (ch == '0' && leading) continue;
        leading = false;
        ++digits;
    }
    return digits;
}

}  // namespace detail

// Paired zero-sum term at one ordinate.
inline double zero_pair_term(double k, double gamma) {
    double d = 0.25 + gamma * gamma;
    return std::log1p((k * k - k) / d) - 0.5 * std::log1p((4.0 * k * k - 2.0 * k) / d);
}

// Reads one ordinate per line; '#' starts a comment, blank lines are
// skipped.  Requires ascending order and at least 9 significant digits.
inline ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("load_zeros: cannot open '" + path + "'");
    ZeroTable table;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(begin, end - begin + 1);

        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw parse_error("load_zeros: malformed ordinate '" + token + "' at line " +
                              std::to_string(line_no));
        }
        if (consumed != token.size() || !std::isfinite(value))
            throw parse_error("load_zeros: malformed ordinate '" + token + "' at line " +
                              std::to_string(line_no));
        if (detail::significant_digits(token) < 9)
            throw parse_error("load_zeros: ordinate '" + token + "' at line " +
                              std::to_string(line_no) + " carries fewer than 9 significant digits");
        if (value <= 14.0)
            throw parse_error("load_zeros: ordinate " + token + " at line " +
                              std::to_string(line_no) + " is not above 14");
        if (!table.ordinates.empty() && value <= table.ordinates.back())
            throw monotonicity_error("load_zeros: ordinates must be strictly increasing (line " +
                                     std::to_string(line_no) + ")");
        table.ordinates.push_back(value);
    }
    table.count = static_cast<std::int64_t>(table.ordinates.size());
    table.source = path + " (ordinates assumed exactly on the critical line, "
                   "established fact for the bundled first 100)";
    return table;
}

// Elementary factor, simplified form:
//   E(k) = ln[ 2^{k/2} (2k-1)^{1/2} pi^{-1/4} (k-1)^{-1} k^{-1/2}
//              (Gamma((k+1)/2)/Gamma(k/2))^{1/2} ].
// The constant part carries ln2/2, not ln2: the xi prefactor e^{A+Bs} with
// A = ln xi(0) = -ln2 contributes A - A/2 = -ln2/2 to the dyadic
// combination.  The numerical closure of the product formula pins the
// constant: with ln2 instead, the residual sits at -0.3466 for every k
// instead of inside the zero-density tail.
inline double E(double k) {
    if (!(k > 1.0)) throw domain_error("E: requires k > 1 (log singularity at k = 1)");
    return 0.5 * k * std::numbers::ln2 + 0.5 * std::log(2.0 * k - 1.0) -
           0.25 * std::log(std::numbers::pi) - std::log(k - 1.0) - 0.5 * std::log(k) +
           0.5 * (specfun::ln_gamma(0.5 * (k + 1.0)) - specfun::ln_gamma(0.5 * k));
}

// Six-term form before the Legendre duplication simplification; agrees with
// E(k) to rounding and is kept as an independent route.
inline double E_six_term(double k) {
    if (!(k > 1.0)) throw domain_error("E_six_term: requires k > 1");
    return 0.5 * specfun::ln_gamma(k) - specfun::ln_gamma(0.5 * k) - 0.5 * std::log(k) +
           0.5 * std::numbers::ln2 - std::log(k - 1.0) + 0.5 * std::log(2.0 * k - 1.0);
}

// sum over the table of paired terms ln(1 - k/rho) - ln(1 - 2k/rho)/2;
// ordered ascending in gamma for a deterministic reduction.
inline ZeroSumResult zero_sum_hp(double k, const ZeroTable& table) {
    if (!(k > 1.0)) throw domain_error("zero_sum_hp: requires k > 1");
    if (table.count < 2)
        throw insufficient_zeros_error("zero_sum_hp: need at least 2 ordinates");
    KahanSum acc;
    for (double g : table.ordinates) acc.add(zero_pair_term(k, g));
    ZeroSumResult r;
    r.value = acc.value();
    r.zeros_used = table.count;
    r.tail_estimate = detail::zero_density_tail(k * k, table.ordinates.back());
    return r;
}

// h_p'(k) from the differentiated product formula,
//   h_p'(k) = sum_rho k/((k-rho)(2k-rho)) + E'(k),
// conjugates paired:  (k-rho)(2k-rho) = A - iB with A = (k-1/2)(2k-1/2) -
// gamma^2 and B = gamma(3k-1), so each gamma contributes 2kA/(A^2+B^2).
// E' uses central differences of the six-term form at step 1e-6.
inline ZeroSumResult hp_prime_explicit(double k, const ZeroTable& table) {
    if (!(k > 1.0 + 2e-6))
        throw domain_error("hp_prime_explicit: requires k > 1 (plus room for the E' stencil)");
    if (table.count < 2)
        throw insufficient_zeros_error("hp_prime_explicit: need at least 2 ordinates");

    const double p = (k - 0.5) * (2.0 * k - 0.5);
    const double q = 3.0 * k - 1.0;
    KahanSum acc;
    for (double g : table.ordinates) {
        double a = p - g * g;
        double b = g * q;
        acc.add(2.0 * k * a / (a * a + b * b));
    }
    const double step = 1e-6;
    double e_prime = (E_six_term(k + step) - E_six_term(k - step)) / (2.0 * step);

    ZeroSumResult r;
    r.value = acc.value() + e_prime;
    r.zeros_used = table.count;
    r.tail_estimate = detail::zero_density_tail(2.0 * k, table.ordinates.back());
    return r;
}

struct CorollaryResidual {
    std::int64_t j = 0;
    double rational_log = 0.0;  // ln(r_j)/2, from the exact rational
    double zero_sum = 0.0;
    double elementary = 0.0;    // E(2j)
    double residual = 0.0;
    double tail_estimate = 0.0;
};

// Residual of ln(r_j)/2 = zero_sum(2j) + E(2j) over the given table.
inline CorollaryResidual verify_corollary_family(std::int64_t j, const ZeroTable& table) {
    if (j < 1) throw domain_error("verify_corollary_family: j must be positive");
    auto even = multiplicative::r_exact(j);
    ZeroSumResult zs = zero_sum_hp(2.0 * static_cast<double>(j), table);
    CorollaryResidual c;
    c.j = j;
    c.rational_log = even.hp_value;
    c.zero_sum = zs.value;
    c.elementary = E(2.0 * static_cast<double>(j));
    c.residual = c.rational_log - zs.value - c.elementary;
    c.tail_estimate = zs.tail_estimate;
    return c;
}

}  // namespace azeta::hadamard
