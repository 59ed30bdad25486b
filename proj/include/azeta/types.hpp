#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace azeta {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (k <= 1, s <= 0, even D, ...).
struct domain_error : error {
    using error::error;
};

// zeta requested at (or within the guard radius of) s = 1.
struct pole_error : domain_error {
    pole_error() : domain_error("zeta: argument is at the pole s = 1") {}
};

// Evaluation point within the guard radius of a pole of h at 1/(2m+1).
struct near_pole_error : error {
    explicit near_pole_error(std::int64_t m)
        : error("evaluation point within 1e-9 of the pole at 1/" +
                std::to_string(2 * m + 1)),
          pole_index(m) {}
    std::int64_t pole_index;
};

struct no_sign_change_error : error { using error::error; };
struct parse_error : error { using error::error; };
struct monotonicity_error : error { using error::error; };
struct insufficient_zeros_error : error { using error::error; };

// A truncated-series value packaged with a rigorous bound on the truncation
// error and the number of terms that were actually summed.
struct EvalResult {
    double value = 0.0;
    double tail_bound = 0.0;  // upper bound on |true value - value|, >= 0
    std::int64_t terms_used = 0;
};

// Shared evaluation knobs.  target_tol is the requested truncation error;
// 1e-14 is the practical binary64 floor.
struct EvalConfig {
    double target_tol = 1e-12;
    std::int64_t max_terms = 2'000'000;
    int em_order = 8;             // Euler-Maclaurin correction order (even, >= 2)
    std::int64_t em_cutoff = 20;  // direct-sum length before the EM correction
    std::int64_t min_terms = 0;   // force at least this many series terms

    void validate() const {
        if (!(target_tol >= 1e-14))
            throw domain_error("EvalConfig: target_tol must be >= 1e-14");
        if (max_terms < 1)
            throw domain_error("EvalConfig: max_terms must be >= 1");
        if (em_order < 2 || em_order % 2 != 0)
            throw domain_error("EvalConfig: em_order must be an even integer >= 2");
        if (em_cutoff < 1)
            throw domain_error("EvalConfig: em_cutoff must be >= 1");
        if (min_terms < 0)
            throw domain_error("EvalConfig: min_terms must be >= 0");
    }
};

// Compensated (Kahan) accumulator for the longer sums.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace azeta
