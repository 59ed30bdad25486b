#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "azeta/additive.hpp"
#include "azeta/hadamard.hpp"
#include "azeta/multiplicative.hpp"
#include "azeta/specfun.hpp"
#include "azeta/verify.hpp"

// Command-line front end.  Every subcommand emits one OutputRecord per
// computation (JSON object per line by default, or csv/plain), all numeric
// output at 12 significant digits.

namespace azeta::cli {

inline std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string value;  // 12-significant-digit number, or "num/den"
    bool value_numeric = true;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
    double elapsed_ms = 0.0;
    std::vector<std::pair<std::string, double>> extras;
};

namespace detail {

inline bool parse_number(const std::string& s, double& out) {
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && !s.empty();
}

// Round-trips through the 12-digit text form so identical invocations dump
// byte-identical JSON numbers.
inline nlohmann::ordered_json number12(double v) {
    double rounded;
    parse_number(fmt12(v), rounded);
    return rounded;
}

}  // namespace detail

class RecordWriter {
public:
    RecordWriter(std::string format, std::ostream& os) : format_(std::move(format)), os_(os) {}

    void write(const OutputRecord& rec) {
        if (format_ == "json") {
            nlohmann::ordered_json j;
            j["command"] = rec.command;
            nlohmann::ordered_json in = nlohmann::ordered_json::object();
            for (const auto& [key, val] : rec.inputs) {
                double num;
                if (val.find_first_not_of("-0123456789") == std::string::npos && !val.empty())
                    in[key] = std::stoll(val);
                else if (detail::parse_number(val, num))
                    in[key] = detail::number12(num);
                else
                    in[key] = val;
            }
            j["inputs"] = in;
            if (rec.value_numeric) {
                double num;
                detail::parse_number(rec.value, num);
                j["value"] = detail::number12(num);
            } else {
                j["value"] = rec.value;
            }
            j["tail_bound"] = detail::number12(rec.tail_bound);
            j["terms_used"] = rec.terms_used;
            for (const auto& [key, val] : rec.extras) j[key] = detail::number12(val);
            j["elapsed_ms"] = detail::number12(rec.elapsed_ms);
            os_ << j.dump() << "\n";
        } else if (format_ == "csv") {
            if (!header_done_) {
                os_ << "command";
                for (const auto& [key, _] : rec.inputs) os_ << "," << key;
                os_ << ",value,tail_bound,terms_used";
                for (const auto& [key, _] : rec.extras) os_ << "," << key;
                os_ << ",elapsed_ms\n";
                header_done_ = true;
            }
            os_ << rec.command;
            for (const auto& [_, val] : rec.inputs) os_ << "," << val;
            os_ << "," << rec.value << "," << fmt12(rec.tail_bound) << "," << rec.terms_used;
            for (const auto& [_, val] : rec.extras) os_ << "," << fmt12(val);
            os_ << "," << fmt12(rec.elapsed_ms) << "\n";
        } else {  // plain
            os_ << rec.value << " tail_bound=" << fmt12(rec.tail_bound)
                << " terms_used=" << rec.terms_used;
            for (const auto& [key, val] : rec.extras) os_ << " " << key << "=" << fmt12(val);
            os_ << "\n";
        }
    }

private:
    std::string format_;
    std::ostream& os_;
    bool header_done_ = false;
};

// Which library operations each subcommand drives; the unit suite checks
// this table covers every public operation.
struct SubcommandInfo {
    std::string name;
    std::vector<std::string> operations;
};

inline const std::vector<SubcommandInfo>& subcommand_registry() {
    static const std::vector<SubcommandInfo> registry = {
        {"eval h", {"additive.h_zeta_series", "additive.duality_residual", "additive.C_tail"}},
        {"eval hp", {"multiplicative.hp_closed", "multiplicative.hp_direct",
                     "specfun.primes_up_to"}},
        {"eval hcomp", {"multiplicative.h_comp"}},
        {"eval phi", {"additive.phi", "specfun.F"}},
        {"eval hpolar", {"additive.h_polar", "additive.h_polar_asymptotic"}},
        {"eval g", {"additive.g_product"}},
        {"eval f", {"additive.f_product"}},
        {"eval zeta", {"specfun.zeta", "specfun.zeta_prime"}},
        {"eval lambda", {"specfun.lambda"}},
        {"eval P", {"multiplicative.prime_zeta", "specfun.mobius"}},
        {"eval E", {"hadamard.E", "specfun.ln_gamma"}},
        {"zeros", {"additive.find_zero", "specfun.zeta"}},
        {"laurent", {"additive.pole_data", "additive.residue_sum_partial"}},
        {"mobius", {"specfun.mobius", "multiplicative.mobius_invert_h"}},
        {"dyadic", {"multiplicative.ln_zeta_dyadic"}},
        {"hadamard", {"hadamard.load_zeros", "hadamard.E", "hadamard.zero_sum_hp",
                      "hadamard.hp_prime_explicit", "hadamard.verify_corollary_family"}},
        {"rj", {"multiplicative.r_exact", "specfun.zeta_even_exact", "specfun.bernoulli"}},
        {"verify",
         {"additive.h_zeta_series", "additive.h_direct", "additive.h_polar", "additive.phi",
          "additive.g_product", "additive.f_product", "additive.pole_data",
          "additive.find_zero", "additive.derivative_bounds", "additive.residue_sum_partial",
          "specfun.F_prime", "specfun.zeta", "multiplicative.r_exact",
          "multiplicative.hp_closed", "multiplicative.hp_direct",
          "multiplicative.mobius_invert_h", "multiplicative.ln_zeta_dyadic",
          "hadamard.load_zeros", "hadamard.E", "hadamard.zero_sum_hp",
          "hadamard.hp_prime_explicit"}},
    };
    return registry;
}

inline const std::vector<std::string>& all_operations() {
    static const std::vector<std::string> ops = {
        "specfun.zeta", "specfun.zeta_prime", "specfun.F", "specfun.F_prime",
        "specfun.lambda", "specfun.ln_gamma", "specfun.bernoulli",
        "specfun.zeta_even_exact", "specfun.primes_up_to", "specfun.mobius",
        "additive.h_direct", "additive.h_zeta_series", "additive.g_product",
        "additive.f_product", "additive.C_tail", "additive.pole_data",
        "additive.residue_sum_partial", "additive.h_polar", "additive.phi",
        "additive.h_polar_asymptotic", "additive.find_zero", "additive.derivative_bounds",
        "additive.duality_residual", "multiplicative.hp_direct", "multiplicative.hp_closed",
        "multiplicative.r_exact", "multiplicative.h_comp", "multiplicative.prime_zeta",
        "multiplicative.ln_zeta_dyadic", "multiplicative.mobius_invert_h",
        "hadamard.load_zeros", "hadamard.E", "hadamard.zero_sum_hp",
        "hadamard.hp_prime_explicit", "hadamard.verify_corollary_family",
    };
    return ops;
}

inline std::string default_zeros_path() {
    if (const char* env = std::getenv("AZETA_ZEROS")) return env;
    return "data/zeta_zeros_100.txt";
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"azeta: the arctanh sum h(k), its continuation, zeros, prime-restricted "
                 "analogue, and zero-sum representation"};
    app.require_subcommand(1);

    double k = 2.0;
    double tol = 1e-12;
    std::int64_t max_terms = 0;  // 0 = library default
    std::int64_t pmax = 0;
    std::int64_t dmax = 11;
    int j_index = 1;
    std::int64_t m_index = 0;
    std::int64_t n_index = -1;
    std::int64_t max_n = 5;
    std::string format = "json";
    std::string zeros_path = default_zeros_path();
    std::string suite = "all";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "target truncation tolerance (>= 1e-14)");
        cmd->add_option("--max-terms", max_terms, "series term cap");
        cmd->add_option("--format", format, "json|csv|plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->require_subcommand(1);
    std::vector<std::string> eval_names = {"h",    "hp",     "hcomp", "phi", "hpolar",
                                           "g",    "f",      "zeta",  "lambda",
                                           "P",    "E"};
    std::vector<CLI::App*> eval_cmds;
    for (const auto& name : eval_names) {
        CLI::App* c = eval->add_subcommand(name, "evaluate " + name);
        c->add_option("--k", k, "evaluation point")->required();
        add_common(c);
        if (name == "hp") c->add_option("--pmax", pmax, "direct prime sum up to P_max");
        if (name == "hpolar")
            c->add_option("--n", n_index, "use the large-k expansion with this many terms");
        if (name == "zeta") c->add_option("--m", m_index, "derivative order (0 or 1)");
        eval_cmds.push_back(c);
    }

    CLI::App* zeros = app.add_subcommand("zeros", "zeros of h in I_0..I_max-n");
    zeros->add_option("--max-n", max_n, "largest interval index");
    add_common(zeros);

    CLI::App* laurent = app.add_subcommand("laurent", "pole location, residue, finite part A_m");
    laurent->add_option("--m", m_index, "pole index")->required();
    add_common(laurent);

    CLI::App* mobius = app.add_subcommand("mobius",
                                          "mu(n), or Moebius inversion of h when --k is given");
    mobius->add_option("--n", n_index, "evaluate mu(n)");
    mobius->add_option("--k", k, "inversion point (k > 1)");
    mobius->add_option("--dmax", dmax, "odd truncation D of the inversion");
    add_common(mobius);

    CLI::App* dyadic = app.add_subcommand("dyadic", "ln zeta(k) by the dyadic h_p formula");
    dyadic->add_option("--k", k, "evaluation point")->required();
    dyadic->add_option("--j", j_index, "number of dyadic levels J");
    add_common(dyadic);

    CLI::App* hadamard_cmd = app.add_subcommand("hadamard", "zero-sum evaluation of h_p(k)");
    hadamard_cmd->add_option("--k", k, "evaluation point")->required();
    hadamard_cmd->add_option("--j", j_index, "also report the corollary residual for r_j");
    hadamard_cmd->add_option("--zeros", zeros_path, "ordinates file");
    add_common(hadamard_cmd);

    CLI::App* rj = app.add_subcommand("rj", "exact rational r_j = zeta(2j)^2/zeta(4j)");
    rj->add_option("--j", j_index, "index j")->required();
    add_common(rj);

    std::string verify_format = "plain";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    verify_cmd->add_option("suite", suite, "all|additive|multiplicative|hadamard")
        ->check(CLI::IsMember({"all", "additive", "multiplicative", "hadamard"}));
    verify_cmd->add_option("--zeros", zeros_path, "ordinates file");
    verify_cmd->add_option("--format", verify_format, "plain|json")
        ->check(CLI::IsMember({"json", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        EvalConfig cfg;
        cfg.target_tol = tol;
        if (max_terms > 0) cfg.max_terms = max_terms;
        RecordWriter writer(format, out);

        auto simple_record = [&](const std::string& command,
                                 std::vector<std::pair<std::string, std::string>> inputs,
                                 const EvalResult& r, double ms) {
            OutputRecord rec;
            rec.command = command;
            rec.inputs = std::move(inputs);
            rec.value = fmt12(r.value);
            rec.tail_bound = r.tail_bound;
            rec.terms_used = r.terms_used;
            rec.elapsed_ms = ms;
            return rec;
        };

        for (std::size_t i = 0; i < eval_cmds.size(); ++i) {
            if (!eval_cmds[i]->parsed()) continue;
            const std::string& name = eval_names[i];
            detail::Stopwatch sw;
            std::vector<std::pair<std::string, std::string>> in = {{"k", fmt12(k)},
                                                                   {"tol", fmt12(tol)}};
            if (name == "h") {
                EvalResult r = additive::h_zeta_series(k, cfg);
                OutputRecord rec = simple_record("eval h", in, r, 0.0);
                if (std::abs(k - 1.0) > 1e-9)
                    rec.extras.emplace_back("duality_residual",
                                            additive::duality_residual(k, cfg));
                rec.elapsed_ms = sw.ms();
                writer.write(rec);
            } else if (name == "hp") {
                EvalResult r;
                std::string cmd = "eval hp";
                if (pmax > 0) {
                    in.emplace_back("pmax", std::to_string(pmax));
                    r = multiplicative::hp_direct(k, pmax, cfg);
                } else {
                    r = multiplicative::hp_closed(k, cfg);
                }
                writer.write(simple_record(cmd, in, r, sw.ms()));
            } else if (name == "hcomp") {
                writer.write(simple_record("eval hcomp", in, multiplicative::h_comp(k, cfg),
                                           sw.ms()));
            } else if (name == "phi") {
                writer.write(simple_record("eval phi", in, additive::phi(k, cfg), sw.ms()));
            } else if (name == "hpolar") {
                if (n_index > 0) {
                    in.emplace_back("n", std::to_string(n_index));
                    double v = additive::h_polar_asymptotic(k, static_cast<int>(n_index), cfg);
                    EvalResult r{v, 0.0, n_index};
                    writer.write(simple_record("eval hpolar", in, r, sw.ms()));
                } else {
                    std::int64_t terms = max_terms > 0 ? max_terms : 1'000'000;
                    in.emplace_back("max_terms", std::to_string(terms));
                    writer.write(simple_record("eval hpolar", in,
                                               additive::h_polar(k, terms, cfg), sw.ms()));
                }
            } else if (name == "g") {
                writer.write(simple_record("eval g", in, additive::g_product(k, cfg), sw.ms()));
            } else if (name == "f") {
                writer.write(simple_record("eval f", in, additive::f_product(k, cfg), sw.ms()));
            } else if (name == "zeta") {
                if (m_index == 1) {
                    in.emplace_back("m", "1");
                    writer.write(
                        simple_record("eval zeta", in, specfun::zeta_prime(k, cfg), sw.ms()));
                } else {
                    writer.write(simple_record("eval zeta", in, specfun::zeta(k, cfg), sw.ms()));
                }
            } else if (name == "lambda") {
                writer.write(simple_record("eval lambda", in, specfun::lambda(k, cfg), sw.ms()));
            } else if (name == "P") {
                writer.write(
                    simple_record("eval P", in, multiplicative::prime_zeta(k, cfg), sw.ms()));
            } else if (name == "E") {
                EvalResult r{hadamard::E(k), 0.0, 0};
                OutputRecord rec = simple_record("eval E", in, r, 0.0);
                rec.extras.emplace_back("six_term", hadamard::E_six_term(k));
                rec.elapsed_ms = sw.ms();
                writer.write(rec);
            }
        }

        if (zeros->parsed()) {
            if (max_n < 0) throw domain_error("zeros: --max-n must be nonnegative");
            for (std::int64_t n = 0; n <= max_n; ++n) {
                detail::Stopwatch sw;
                additive::ZeroDatum z = additive::find_zero(n, cfg);
                OutputRecord rec;
                rec.command = "zeros";
                rec.inputs = {{"n", std::to_string(n)}};
                rec.value = fmt12(z.z);
                rec.tail_bound = z.bisection_width;
                rec.terms_used = 0;
                rec.extras = {{"zeta_at_zero", z.zeta_at_zero},
                              {"bisection_width", z.bisection_width}};
                rec.elapsed_ms = sw.ms();
                writer.write(rec);
            }
        }

        if (laurent->parsed()) {
            detail::Stopwatch sw;
            additive::PoleDatum p = additive::pole_data(m_index, cfg);
            OutputRecord rec;
            rec.command = "laurent";
            rec.inputs = {{"m", std::to_string(m_index)}, {"tol", fmt12(tol)}};
            rec.value = fmt12(p.finite_part.value);
            rec.tail_bound = p.finite_part.tail_bound;
            rec.terms_used = p.finite_part.terms_used;
            rec.extras = {{"location", p.location},
                          {"residue", p.residue},
                          {"residue_sum_partial_1e6", additive::residue_sum_partial(1'000'000)}};
            rec.elapsed_ms = sw.ms();
            writer.write(rec);
        }

        if (mobius->parsed()) {
            detail::Stopwatch sw;
            if (mobius->count("--k") > 0) {
                EvalResult r = multiplicative::mobius_invert_h(k, dmax, cfg);
                OutputRecord rec = simple_record(
                    "mobius", {{"k", fmt12(k)}, {"dmax", std::to_string(dmax)}}, r, sw.ms());
                rec.extras.emplace_back("zeta_minus_1",
                                        specfun::zeta_minus_1(k, cfg).value);
                writer.write(rec);
            } else {
                if (n_index < 1) throw domain_error("mobius: provide --n or --k");
                EvalResult r{static_cast<double>(specfun::mobius(n_index)), 0.0, 0};
                writer.write(simple_record("mobius", {{"n", std::to_string(n_index)}}, r,
                                           sw.ms()));
            }
        }

        if (dyadic->parsed()) {
            detail::Stopwatch sw;
            EvalResult r = multiplicative::ln_zeta_dyadic(k, j_index, cfg);
            writer.write(simple_record("dyadic",
                                       {{"k", fmt12(k)}, {"j", std::to_string(j_index)}}, r,
                                       sw.ms()));
        }

        if (hadamard_cmd->parsed()) {
            detail::Stopwatch sw;
            hadamard::ZeroTable table = hadamard::load_zeros(zeros_path);
            hadamard::ZeroSumResult zs = hadamard::zero_sum_hp(k, table);
            double e_val = hadamard::E(k);
            double hp = multiplicative::hp_closed(k, cfg).value;
            OutputRecord rec;
            rec.command = "hadamard";
            rec.inputs = {{"k", fmt12(k)}, {"zeros", zeros_path}};
            rec.value = fmt12(zs.value);
            rec.tail_bound = zs.tail_estimate;
            rec.terms_used = zs.zeros_used;
            rec.extras = {{"E", e_val},
                          {"hp_closed", hp},
                          {"closure_residual", hp - e_val - zs.value},
                          {"hp_prime_explicit", hadamard::hp_prime_explicit(k, table).value}};
            if (hadamard_cmd->count("--j") > 0) {
                hadamard::CorollaryResidual c = hadamard::verify_corollary_family(j_index, table);
                rec.extras.emplace_back("corollary_residual", c.residual);
                rec.extras.emplace_back("corollary_tail_estimate", c.tail_estimate);
            }
            rec.elapsed_ms = sw.ms();
            writer.write(rec);
        }

        if (rj->parsed()) {
            detail::Stopwatch sw;
            multiplicative::EvenValue v = multiplicative::r_exact(j_index);
            OutputRecord rec;
            rec.command = "rj";
            rec.inputs = {{"j", std::to_string(j_index)}};
            rec.value = v.r.str();
            rec.value_numeric = false;
            rec.extras = {{"hp_value", v.hp_value}};
            rec.elapsed_ms = sw.ms();
            writer.write(rec);
        }

        if (verify_cmd->parsed()) {
            std::vector<verify::CriterionResult> results = verify::run(suite, zeros_path);
            int failures = 0;
            if (verify_format == "json") {
                for (const auto& r : results) {
                    nlohmann::ordered_json j;
                    j["criterion"] = r.index;
                    j["suite"] = r.suite;
                    j["name"] = r.name;
                    j["pass"] = r.pass;
                    j["detail"] = r.detail;
                    out << j.dump() << "\n";
                    failures += r.pass ? 0 : 1;
                }
            } else {
                for (const auto& r : results) {
                    failures += r.pass ? 0 : 1;
                    out << verify::format_line(r);
                }
                out << (results.size() - failures) << "/" << results.size()
                    << " criteria passed\n";
            }
            return failures == 0 ? 0 : 1;
        }

        return 0;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace azeta::cli
