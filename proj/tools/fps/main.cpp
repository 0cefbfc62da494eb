// fps: exact formal power series from the command line.
//
// Subcommands: series, inverse, limit, check-theorem2, arnold.
// Exit codes: 0 success, 1 evaluation/check failure, 2 usage error.

#include "fps/elementary.hpp"
#include "fps/errors.hpp"
#include "fps/expr.hpp"
#include "fps/inversion.hpp"
#include "fps/limit.hpp"
#include "fps/theorem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

namespace {

using fps::Rational;
using fps::TruncatedPowerSeries;
using nlohmann::json;

constexpr int kDefaultOrder = 16;
constexpr int kMaxOrder = 64;  // big-rational bit growth is severe past this

json to_json(const TruncatedPowerSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
    return json{{"precision", s.precision()}, {"coeffs", coeffs}};
}

json to_json(const fps::LimitResult& r) {
    if (const auto* fin = std::get_if<fps::FiniteLimit>(&r))
        return json{{"kind", "finite"}, {"value", fin->value.str()}};
    if (const auto* inf = std::get_if<fps::SignedInfinityLimit>(&r))
        return json{{"kind", "signed_infinity"}, {"sign", inf->sign}, {"gap", inf->gap}};
    if (const auto* two = std::get_if<fps::TwoSidedDivergenceLimit>(&r))
        return json{{"kind", "two_sided_divergence"}, {"gap", two->gap}};
    const auto& und = std::get<fps::UndeterminedLimit>(r);
    return json{{"kind", "undetermined_at_precision"}, {"reached_order", und.reached_order}};
}

std::string to_text(const fps::LimitResult& r) {
    if (const auto* fin = std::get_if<fps::FiniteLimit>(&r)) return fin->value.str();
    if (const auto* inf = std::get_if<fps::SignedInfinityLimit>(&r))
        return std::string(inf->sign > 0 ? "+infinity" : "-infinity") + " (order gap " +
               std::to_string(inf->gap) + ")";
    if (const auto* two = std::get_if<fps::TwoSidedDivergenceLimit>(&r))
        return "two-sided divergence (order gap " + std::to_string(two->gap) + ")";
    return "undetermined at precision " +
           std::to_string(std::get<fps::UndeterminedLimit>(r).reached_order);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_series(const std::string& text, int order, bool as_json, bool invert) {
    const auto expr = fps::parse(text);
    auto series = fps::evaluate(*expr, order);
    if (invert) series = fps::lagrange_inverse(series);
    if (as_json)
        emit(to_json(series));
    else
        std::cout << series.str() << "\n";
    return 0;
}

int run_limit(const std::string& num_text, const std::string& den_text, int order, int max_order,
              bool as_json) {
    const auto num = fps::parse(num_text);
    const auto den = fps::parse(den_text);
    const auto result = fps::limit_ratio(*num, *den, order, max_order);
    if (as_json)
        emit(to_json(result));
    else
        std::cout << to_text(result) << "\n";
    return 0;
}

int run_check_theorem2(std::uint64_t seed, int trials, int order, int coeff_bound) {
    int held = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto base = seed + 2 * static_cast<std::uint64_t>(trial);
        const auto f = fps::random_regular(base, order, coeff_bound);
        auto g = fps::random_regular(base + 1, order, coeff_bound);
        for (std::uint64_t salt = 1; g == f; ++salt)
            g = fps::random_regular(base + 1 + salt * 0x9e3779b97f4a7c15ULL, order, coeff_bound);
        const auto report = fps::check_theorem2(f, g);
        if (report.holds) {
            ++held;
        } else {
            std::cerr << "counterexample at trial " << trial << ": direct (k=" << report.k_direct
                      << ", m=" << report.m_direct.str() << ") inverse (k=" << report.k_inverse
                      << ", m=" << report.m_inverse.str() << ")\n"
                      << "  f = " << f.str() << "\n  g = " << g.str() << "\n";
        }
    }
    std::cout << held << "/" << trials << " hold\n";
    return held == trials ? 0 : 1;
}

std::optional<fps::OrdLead> try_ord_lead(const TruncatedPowerSeries& s) {
    if (s.is_zero()) return std::nullopt;
    return fps::ord_lead(s);
}

int run_arnold(int order, bool as_json) {
    const std::string num_text = "sin(tan(x)) - tan(sin(x))";
    const std::string den_text = "asin(atan(x)) - atan(asin(x))";
    const auto num_expr = fps::parse(num_text);
    const auto den_expr = fps::parse(den_text);
    const auto num = fps::evaluate(*num_expr, order);
    const auto den = fps::evaluate(*den_expr, order);
    const auto limit = fps::limit_ratio(*num_expr, *den_expr, order, order);

    if (as_json) {
        emit(json{{"order", order},
                  {"numerator", to_json(num)},
                  {"denominator", to_json(den)},
                  {"limit", to_json(limit)}});
    } else {
        std::cout << num_text << "   = " << num.str() << "\n"
                  << den_text << " = " << den.str() << "\n";
        const auto num_lead = try_ord_lead(num);
        const auto den_lead = try_ord_lead(den);
        if (num_lead && den_lead)
            std::cout << "leading terms: " << num_lead->leading.str() << " * x^" << num_lead->order
                      << " and " << den_lead->leading.str() << " * x^" << den_lead->order << "\n";
        std::cout << "limit = " << to_text(limit) << "\n";
    }

    const auto num_lead = try_ord_lead(num);
    const auto den_lead = try_ord_lead(den);
    const fps::OrdLead expected{7, Rational(-1, 30)};
    const bool ok = num_lead == expected && den_lead == expected &&
                    limit == fps::LimitResult{fps::FiniteLimit{Rational(1)}};
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact formal power series: expansion, compositional inversion, ratio limits"};
    app.require_subcommand(1);

    std::string expr_text, num_text, den_text;
    int order = kDefaultOrder;
    int max_order = kMaxOrder;
    bool as_json = false;

    auto add_order = [](CLI::App* cmd, int& target, int minimum, const char* help) {
        cmd->add_option("--order", target, help)->check(CLI::Range(minimum, kMaxOrder));
    };

    auto* series_cmd = app.add_subcommand("series", "Expand an expression to a series");
    series_cmd->add_option("expr", expr_text, "Expression in x")->required();
    add_order(series_cmd, order, 1, "Truncation precision");
    series_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* inverse_cmd = app.add_subcommand("inverse", "Compositional inverse of an expression");
    inverse_cmd->add_option("expr", expr_text, "Regular expression in x")->required();
    add_order(inverse_cmd, order, 1, "Truncation precision");
    inverse_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto* limit_cmd = app.add_subcommand("limit", "Ratio limit at 0 by series expansion");
    limit_cmd->add_option("num", num_text, "Numerator expression")->required();
    limit_cmd->add_option("den", den_text, "Denominator expression")->required();
    add_order(limit_cmd, order, 1, "Starting precision");
    limit_cmd->add_option("--max-order", max_order, "Precision cap for escalation")
        ->check(CLI::Range(1, kMaxOrder));
    limit_cmd->add_flag("--json", as_json, "Machine-readable output");

    std::uint64_t seed = 1;
    int trials = 100;
    int theorem_order = 12;
    int coeff_bound = 9;
    auto* check_cmd = app.add_subcommand(
        "check-theorem2", "Property harness: ord and leading coefficient of f-g match g^-1 - f^-1");
    check_cmd->add_option("--trials", trials, "Number of random pairs")->check(CLI::PositiveNumber);
    add_order(check_cmd, theorem_order, 2, "Series precision per trial");
    check_cmd->add_option("--seed", seed, "Deterministic base seed");
    check_cmd->add_option("--coeff-bound", coeff_bound, "Bound on numerators and denominators")
        ->check(CLI::PositiveNumber);

    int arnold_order = 8;
    auto* arnold_cmd =
        app.add_subcommand("arnold", "Reproduce the sin/tan vs asin/atan ratio limit");
    add_order(arnold_cmd, arnold_order, 1, "Truncation precision");
    arnold_cmd->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (series_cmd->parsed()) return run_series(expr_text, order, as_json, false);
        if (inverse_cmd->parsed()) return run_series(expr_text, order, as_json, true);
        if (limit_cmd->parsed()) {
            if (order > max_order) {
                std::cerr << "--order must not exceed --max-order\n";
                return 2;
            }
            return run_limit(num_text, den_text, order, max_order, as_json);
        }
        if (check_cmd->parsed()) return run_check_theorem2(seed, trials, theorem_order, coeff_bound);
        if (arnold_cmd->parsed()) return run_arnold(arnold_order, as_json);
    } catch (const fps::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
