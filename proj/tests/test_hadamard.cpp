#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "azeta/hadamard.hpp"

using namespace azeta;
using Catch::Matchers::WithinAbs;

#ifndef AZETA_DATA_DIR
#define AZETA_DATA_DIR "data"
#endif

namespace {

const std::string bundled = std::string(AZETA_DATA_DIR) + "/zeta_zeros_100.txt";

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

hadamard::ZeroTable truncated(const hadamard::ZeroTable& t, std::int64_t n) {
    hadamard::ZeroTable head = t;
    head.ordinates.resize(static_cast<std::size_t>(n));
    head.count = n;
    return head;
}

}  // namespace

TEST_CASE("load_zeros: bundled table", "[hadamard]") {
    auto table = hadamard::load_zeros(bundled);
    REQUIRE(table.count == 100);
    CHECK_THAT(table.ordinates.front(), WithinAbs(14.134725142, 1e-8));
    CHECK(table.ordinates.front() > 14.0);
    for (std::size_t i = 1; i < table.ordinates.size(); ++i)
        REQUIRE(table.ordinates[i] > table.ordinates[i - 1]);
    CHECK(!table.source.empty());
}

TEST_CASE("load_zeros: parsing and validation", "[hadamard]") {
    auto three = write_temp("azeta_three.txt",
                            "14.134725142\n21.022039639\n25.010857580\n");
    CHECK(hadamard::load_zeros(three).count == 3);

    auto empty = write_temp("azeta_empty.txt", "# only a comment\n\n");
    auto t0 = hadamard::load_zeros(empty);
    CHECK(t0.count == 0);
    REQUIRE_THROWS_AS(hadamard::zero_sum_hp(2.0, t0), insufficient_zeros_error);

    auto bad = write_temp("azeta_bad.txt", "14.134725142\nabc\n");
    REQUIRE_THROWS_AS(hadamard::load_zeros(bad), parse_error);

    auto decreasing = write_temp("azeta_dec.txt", "21.022039639\n14.134725142\n");
    REQUIRE_THROWS_AS(hadamard::load_zeros(decreasing), monotonicity_error);

    auto coarse = write_temp("azeta_coarse.txt", "14.134725142\n21.02\n");
    REQUIRE_THROWS_AS(hadamard::load_zeros(coarse), parse_error);

    REQUIRE_THROWS_AS(hadamard::load_zeros("/nonexistent/zeros.txt"), parse_error);
}

TEST_CASE("E: the two forms agree", "[hadamard]") {
    for (double k : {1.5, 2.0, 3.0, 7.0}) {
        CAPTURE(k);
        CHECK_THAT(hadamard::E(k) - hadamard::E_six_term(k), WithinAbs(0.0, 1e-12));
    }
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> dist(1.05, 10.0);
    for (int i = 0; i < 20; ++i) {
        double k = dist(gen);
        CAPTURE(k);
        REQUIRE_THAT(hadamard::E(k) - hadamard::E_six_term(k), WithinAbs(0.0, 1e-12));
    }
    // direct evaluation through ln_gamma, written out independently
    double e2 = std::log(std::exp2(1.0) * std::sqrt(3.0) / std::pow(std::numbers::pi, 0.25) /
                         std::sqrt(2.0) *
                         std::sqrt(std::exp(specfun::ln_gamma(1.5) - specfun::ln_gamma(1.0))));
    CHECK_THAT(hadamard::E(2.0), WithinAbs(e2, 1e-12));
    REQUIRE_THROWS_AS(hadamard::E(1.0), domain_error);
    REQUIRE_THROWS_AS(hadamard::E_six_term(0.5), domain_error);
}

TEST_CASE("zero_sum_hp: closure of the product formula", "[hadamard]") {
    EvalConfig cfg;
    auto table = hadamard::load_zeros(bundled);
    double hp2 = multiplicative::hp_closed(2.0, cfg).value;
    auto zs = hadamard::zero_sum_hp(2.0, table);
    CHECK(zs.zeros_used == 100);
    CHECK(zs.tail_estimate > 0.0);
    CHECK(std::abs(hp2 - hadamard::E(2.0) - zs.value) <= zs.tail_estimate);

    // residual shrinks monotonically as zeros are added (tail terms share a sign)
    double prev = 1e300;
    for (std::int64_t n : {10, 25, 50, 100}) {
        double resid =
            std::abs(hp2 - hadamard::E(2.0) - hadamard::zero_sum_hp(2.0, truncated(table, n)).value);
        CAPTURE(n);
        REQUIRE(resid < prev);
        prev = resid;
    }
    double r25 = std::abs(hp2 - hadamard::E(2.0) -
                          hadamard::zero_sum_hp(2.0, truncated(table, 25)).value);
    double r100 = std::abs(hp2 - hadamard::E(2.0) - zs.value);
    double factor = r25 / r100;
    CHECK(factor >= 2.0);
    CHECK(factor <= 8.0);

    for (double k : {1.5, 3.0}) {
        double hp = multiplicative::hp_closed(k, cfg).value;
        double prev_resid = 1e300;
        for (std::int64_t n : {10, 25, 50, 100}) {
            double resid = std::abs(hp - hadamard::E(k) -
                                    hadamard::zero_sum_hp(k, truncated(table, n)).value);
            CAPTURE(k, n);
            REQUIRE(resid < prev_resid);
            prev_resid = resid;
        }
    }

    // per-term magnitude at gamma_1 is on the k^2/|rho|^2 scale
    double d1 = 0.25 + table.ordinates[0] * table.ordinates[0];
    double scale = 4.0 / d1;
    double t1 = std::abs(hadamard::zero_pair_term(2.0, table.ordinates[0]));
    CHECK(t1 >= 0.5 * scale);
    CHECK(t1 <= 2.0 * scale);

    REQUIRE_THROWS_AS(hadamard::zero_sum_hp(0.8, table), domain_error);
}

TEST_CASE("pairing reality: real form equals the complex pair sum", "[hadamard]") {
    auto table = hadamard::load_zeros(bundled);
    for (double k : {1.5, 2.0, 4.0}) {
        for (int i = 0; i < 10; ++i) {
            double g = table.ordinates[static_cast<std::size_t>(i) * 9];
            std::complex<double> rho(0.5, g);
            std::complex<double> conj_term =
                std::log(1.0 - k / rho) - 0.5 * std::log(1.0 - 2.0 * k / rho) +
                std::log(1.0 - k / std::conj(rho)) -
                0.5 * std::log(1.0 - 2.0 * k / std::conj(rho));
            CAPTURE(k, g);
            REQUIRE(std::abs(conj_term.imag()) == 0.0);
            REQUIRE_THAT(hadamard::zero_pair_term(k, g),
                         WithinAbs(conj_term.real(), 1e-12));
        }
    }
}

TEST_CASE("linear-term cancellation: quadratic per-term decay", "[hadamard]") {
    auto table = hadamard::load_zeros(bundled);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = table.ordinates.size() - 5; i < table.ordinates.size(); ++i) {
        double g = table.ordinates[i];
        double t = std::abs(hadamard::zero_pair_term(2.0, g));
        REQUIRE(t <= 4.0 * 4.0 / (g * g));  // |term| <= 4 k^2 / gamma^2 at k=2
        sx += std::log(g);
        sy += std::log(t);
        sxx += std::log(g) * std::log(g);
        sxy += std::log(g) * std::log(t);
        ++n;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope <= -1.9);
}

TEST_CASE("hp_prime_explicit: against finite differences", "[hadamard]") {
    EvalConfig cfg;
    auto table = hadamard::load_zeros(bundled);
    for (double k : {2.0, 3.0}) {
        auto ex = hadamard::hp_prime_explicit(k, table);
        const double step = 1e-5;
        double fd = (multiplicative::hp_closed(k + step, cfg).value -
                     multiplicative::hp_closed(k - step, cfg).value) /
                    (2.0 * step);
        CAPTURE(k);
        CHECK(std::abs(ex.value - fd) <= std::max(1e-6, ex.tail_estimate));
    }
    CHECK(hadamard::hp_prime_explicit(2.0, table).value < 0.0);

    // per-term decay: |term| * gamma^2 bounded over the table at k=2
    const double p = 1.5 * 3.5, q = 5.0;
    for (double g : table.ordinates) {
        double a = p - g * g, b = g * q;
        double term = 2.0 * 2.0 * a / (a * a + b * b);
        CAPTURE(g);
        REQUIRE(std::abs(term) * g * g <= 30.0);
    }
    REQUIRE_THROWS_AS(hadamard::hp_prime_explicit(1.0, table), domain_error);
}

TEST_CASE("verify_corollary_family: rational logs against zero sums", "[hadamard]") {
    auto table = hadamard::load_zeros(bundled);
    for (std::int64_t j : {1, 2}) {
        auto c = hadamard::verify_corollary_family(j, table);
        CAPTURE(j);
        CHECK(std::abs(c.residual) <= c.tail_estimate);
    }
    auto c100 = hadamard::verify_corollary_family(1, table);
    auto c10 = hadamard::verify_corollary_family(1, truncated(table, 10));
    CHECK(std::abs(c100.residual) < std::abs(c10.residual) + 1e-12);
    REQUIRE_THROWS_AS(hadamard::verify_corollary_family(0, table), domain_error);
}
