#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "azeta/specfun.hpp"
#include "oracles.hpp"

using namespace azeta;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("zeta: reference values and domain", "[specfun]") {
    EvalConfig cfg;
    auto z2 = specfun::zeta(2.0, cfg);
    REQUIRE_THAT(z2.value, WithinAbs(pi * pi / 6.0, 1e-13));
    REQUIRE(z2.tail_bound <= cfg.target_tol);
    REQUIRE(z2.tail_bound >= 0.0);

    REQUIRE_THAT(specfun::zeta(0.5, cfg).value, WithinAbs(-1.4603545088095868, 1e-12));

    REQUIRE_THROWS_AS(specfun::zeta(1.0, cfg), pole_error);
    REQUIRE_THROWS_AS(specfun::zeta(1.0 + 5e-13, cfg), pole_error);
    REQUIRE_THROWS_AS(specfun::zeta(0.0, cfg), domain_error);
    REQUIRE_THROWS_AS(specfun::zeta(-2.0, cfg), domain_error);
}

TEST_CASE("zeta: alternating eta-series oracle", "[specfun]") {
    EvalConfig cfg;
    for (double s : {0.3, 0.5, 1.5, 2.5}) {
        CAPTURE(s);
        CHECK_THAT(specfun::zeta(s, cfg).value, WithinAbs(oracles::zeta_eta(s), 1e-10));
    }
}

TEST_CASE("zeta: Euler-Maclaurin order consistency", "[specfun]") {
    EvalConfig c8, c12;
    c12.em_order = 12;
    std::mt19937 gen(20260810);
    std::uniform_real_distribution<double> dist(0.05, 30.0);
    int done = 0;
    while (done < 100) {
        double s = dist(gen);
        if (std::abs(s - 1.0) < 1e-3) continue;
        double d = std::abs(specfun::zeta(s, c8).value - specfun::zeta(s, c12).value);
        CAPTURE(s);
        REQUIRE(d <= 1e-11);
        ++done;
    }
}

TEST_CASE("zeta: tail_bound is honest on small cases", "[specfun]") {
    // loose configuration against a much tighter one
    EvalConfig loose;
    loose.target_tol = 1e-8;
    loose.em_order = 2;
    EvalConfig tight;
    for (double s : {0.2, 0.7, 1.3, 4.0}) {
        auto a = specfun::zeta(s, loose);
        auto b = specfun::zeta(s, tight);
        CAPTURE(s);
        CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
    }
}

TEST_CASE("zeta_prime: finite-difference oracle", "[specfun]") {
    EvalConfig cfg;
    auto zp = [&](double s) { return specfun::zeta(s, cfg).value; };
    CHECK_THAT(specfun::zeta_prime(2.0, cfg).value,
               WithinAbs(oracles::fd_derivative(zp, 2.0), 1e-8));
    CHECK_THAT(specfun::zeta_prime(2.0, cfg).value, WithinAbs(-0.93754825431584376, 1e-10));
    CHECK_THAT(specfun::zeta_prime(0.5, cfg).value,
               WithinAbs(oracles::fd_derivative(zp, 0.5), 1e-7));

    // two-term Dirichlet oracle at s = 20; next term is ~1.3e-12
    double two_term = -(std::log(2.0) / std::pow(2.0, 20.0) +
                        std::log(3.0) / std::pow(3.0, 20.0));
    CHECK_THAT(specfun::zeta_prime(20.0, cfg).value, WithinAbs(two_term, 5e-12));
    CHECK(std::abs(specfun::zeta_prime(20.0, cfg).value /
                       (-std::log(2.0) / std::pow(2.0, 20.0)) -
                   1.0) < 0.01);
    REQUIRE_THROWS_AS(specfun::zeta_prime(1.0, cfg), pole_error);
}

TEST_CASE("F: entire regularization of zeta", "[specfun]") {
    EvalConfig cfg;
    CHECK_THAT(specfun::F(1.0, cfg).value, WithinAbs(euler_gamma - 1.0, 1e-13));
    CHECK_THAT(specfun::F(2.0, cfg).value, WithinAbs(pi * pi / 6.0 - 2.0, 1e-13));
    REQUIRE_THROWS_AS(specfun::F(0.0, cfg), domain_error);
    REQUIRE_THROWS_AS(specfun::F(-1.0, cfg), domain_error);

    // no catastrophic cancellation near the pole
    for (double s : {1.0 - 1e-9, 1.0 + 1e-9, 1.0 + 1e-6}) {
        CAPTURE(s);
        CHECK_THAT(specfun::F(s, cfg).value, WithinAbs(euler_gamma - 1.0, 1e-5));
    }
}

TEST_CASE("F_prime: bound on (0,2] and finite-difference check", "[specfun]") {
    EvalConfig cfg;
    auto f = [&](double s) { return specfun::F(s, cfg).value; };
    CHECK_THAT(specfun::F_prime(1.0, cfg).value,
               WithinAbs(oracles::fd_derivative(f, 1.0), 1e-8));
    CHECK_THAT(specfun::F_prime(0.3, cfg).value,
               WithinAbs(oracles::fd_derivative(f, 0.3), 1e-8));

    for (int i = 1; i <= 200; ++i) {
        double s = 2.0 * i / 200.0;
        double bound = 1.0 / 3.0 - 1.0 / (6.0 * (s + 1.0)) + 1e-9;
        CAPTURE(s);
        REQUIRE(std::abs(specfun::F_prime(s, cfg).value) <= bound);
    }
}

TEST_CASE("lambda: Dirichlet lambda values", "[specfun]") {
    EvalConfig cfg;
    CHECK_THAT(specfun::lambda(2.0, cfg).value, WithinAbs(pi * pi / 8.0, 1e-13));
    CHECK_THAT(specfun::lambda(4.0, cfg).value,
               WithinAbs(pi * pi * pi * pi / 96.0, 1e-13));
    CHECK_THAT(specfun::lambda(3.0, cfg).value,
               WithinAbs(0.875 * oracles::zeta_eta(3.0), 1e-12));
    for (double s : {2.0, 3.0, 4.0, 6.0}) {
        CAPTURE(s);
        double direct = (1.0 - std::pow(2.0, -s)) * specfun::zeta(s, cfg).value;
        CHECK_THAT(specfun::lambda(s, cfg).value, WithinAbs(direct, 1e-12));
    }
    REQUIRE_THROWS_AS(specfun::lambda(1.0, cfg), domain_error);
    REQUIRE_THROWS_AS(specfun::lambda(0.5, cfg), domain_error);
}

TEST_CASE("ln_gamma: values, duplication, libm cross-check", "[specfun]") {
    CHECK(std::abs(specfun::ln_gamma(1.0)) <= 1e-14);
    CHECK(std::abs(specfun::ln_gamma(2.0)) <= 1e-14);
    CHECK_THAT(specfun::ln_gamma(0.5), WithinAbs(0.5 * std::log(pi), 1e-13));

    for (double k : {1.5, 2.0, 7.25}) {
        double residual = specfun::ln_gamma(k) -
                          ((k - 1.0) * std::numbers::ln2 - 0.5 * std::log(pi) +
                           specfun::ln_gamma(0.5 * k) + specfun::ln_gamma(0.5 * (k + 1.0)));
        CAPTURE(k);
        CHECK(std::abs(residual) <= 1e-12);
    }
    for (double x = 0.1; x < 30.0; x += 0.37) {
        CAPTURE(x);
        double ref = std::lgamma(x);
        REQUIRE(std::abs(specfun::ln_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
    REQUIRE_THROWS_AS(specfun::ln_gamma(0.0), domain_error);
    REQUIRE_THROWS_AS(specfun::ln_gamma(-3.5), domain_error);
}

TEST_CASE("bernoulli: exact values and recurrence identity", "[specfun]") {
    CHECK(specfun::bernoulli(0) == Rational(1));
    CHECK(specfun::bernoulli(1) == Rational(-1, 2));
    CHECK(specfun::bernoulli(2) == Rational(1, 6));
    CHECK(specfun::bernoulli(4) == Rational(-1, 30));
    CHECK(specfun::bernoulli(12) == Rational(-691, 2730));
    for (int n = 3; n <= 21; n += 2) CHECK(specfun::bernoulli(n) == Rational(0));

    // sum_{k=0}^{n} C(n+1,k) B_k = 0, exactly, for n = 1..50
    for (int n = 1; n <= 50; ++n) {
        Rational acc(0);
        BigInt binom = 1;
        for (int k = 0; k <= n; ++k) {
            acc = acc + Rational(binom) * specfun::bernoulli(k);
            binom = binom * (n + 1 - k) / (k + 1);
        }
        CAPTURE(n);
        REQUIRE(acc == Rational(0));
    }
    REQUIRE_THROWS_AS(specfun::bernoulli(-1), domain_error);
    REQUIRE_THROWS_AS(specfun::bernoulli(201), domain_error);
}

TEST_CASE("bernoulli: Akiyama-Tanigawa oracle", "[specfun]") {
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        REQUIRE(specfun::bernoulli(n) == oracles::bernoulli_akiyama_tanigawa(n));
    }
}

TEST_CASE("zeta_even_exact: rational coefficients of pi powers", "[specfun]") {
    EvalConfig cfg;
    auto j1 = specfun::zeta_even_exact(1);
    CHECK(j1.coefficient == Rational(1, 6));
    CHECK(j1.pi_power == 2);
    CHECK(specfun::zeta_even_exact(2).coefficient == Rational(1, 90));
    CHECK(specfun::zeta_even_exact(3).coefficient == Rational(1, 945));
    for (int j = 1; j <= 8; ++j) {
        auto v = specfun::zeta_even_exact(j);
        double numeric = v.coefficient.to_double() * std::pow(pi, v.pi_power);
        CAPTURE(j);
        CHECK_THAT(numeric, WithinAbs(specfun::zeta(2.0 * j, cfg).value, 1e-12));
    }
    REQUIRE_THROWS_AS(specfun::zeta_even_exact(0), domain_error);
}

TEST_CASE("primes_up_to: sieve", "[specfun]") {
    CHECK(specfun::primes_up_to(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(specfun::primes_up_to(2) == std::vector<std::int64_t>{2});
    CHECK(specfun::primes_up_to(1).empty());
    CHECK(specfun::primes_up_to(1'000'000).size() == 78498);
    REQUIRE_THROWS_AS(specfun::primes_up_to(0), domain_error);
}

TEST_CASE("mobius: values and multiplicativity", "[specfun]") {
    CHECK(specfun::mobius(1) == 1);
    CHECK(specfun::mobius(9) == 0);
    CHECK(specfun::mobius(15) == 1);
    CHECK(specfun::mobius(2) == -1);
    CHECK(specfun::mobius(30) == -1);

    auto primes = specfun::primes_up_to(100);
    for (std::int64_t p : primes)
        for (std::int64_t m = 1; m <= 100; ++m) {
            CAPTURE(p, m);
            REQUIRE(specfun::mobius(p * p * m) == 0);
        }
    for (std::int64_t a = 1; a <= 100; ++a)
        for (std::int64_t b = a + 1; b <= 100; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CAPTURE(a, b);
            REQUIRE(specfun::mobius(a * b) == specfun::mobius(a) * specfun::mobius(b));
        }
    REQUIRE_THROWS_AS(specfun::mobius(0), domain_error);
}

TEST_CASE("concurrent callers share the Bernoulli memo safely", "[specfun]") {
    std::vector<std::thread> workers;
    std::array<Rational, 8> b150;
    std::array<double, 8> z07{};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            EvalConfig cfg;
            b150[t] = specfun::bernoulli(150);
            z07[t] = specfun::zeta(0.7, cfg).value;
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 8; ++t) {
        REQUIRE(b150[t] == b150[0]);
        REQUIRE(z07[t] == z07[0]);
    }
}

TEST_CASE("EvalConfig: validation", "[specfun]") {
    EvalConfig cfg;
    cfg.target_tol = 1e-15;
    REQUIRE_THROWS_AS(specfun::zeta(2.0, cfg), domain_error);
    cfg = {};
    cfg.em_order = 7;
    REQUIRE_THROWS_AS(specfun::zeta(2.0, cfg), domain_error);
    cfg = {};
    cfg.max_terms = 0;
    REQUIRE_THROWS_AS(specfun::zeta(2.0, cfg), domain_error);
}

TEST_CASE("Rational: normalization and arithmetic", "[specfun]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(715, 691).str() == "715/691");
    CHECK(Rational(42).str() == "42");
    CHECK_THAT(Rational(5, 2).to_double(), WithinAbs(2.5, 0.0));
    CHECK_THAT(Rational(5, 2).log_abs(), WithinAbs(std::log(2.5), 1e-14));

    // log survives operands far beyond binary64 range
    Rational huge(specfun::factorial(200), BigInt(1));
    CHECK_THAT(huge.log_abs(), WithinAbs(std::lgamma(201.0), 1e-10 * std::lgamma(201.0)));
    REQUIRE_THROWS_AS(Rational(1, 0), domain_error);
    REQUIRE_THROWS_AS(Rational(1, 2) / Rational(0), domain_error);
}
