// Command-line harness: figure CSVs, single-pair reports, invariant checks, constants.

#include "charseq/experiments.hpp"
#include "charseq/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (out) out << text;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kUsage;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character combination sequences: correlation figures of merit and their limits"};
    app.require_subcommand(1);

    auto* figure = app.add_subcommand(
        "figure", "Regenerate a figure as CSV (primes p = 1 mod 4 with 13 <= p < pmax; cecilia ignores pmax)");
    std::string figure_id;
    std::uint32_t pmax = 2000;
    std::string out_path;
    unsigned jobs = 1;
    std::optional<double> figure_lambda;
    figure->add_option("name", figure_id, "aaron | edward | boris | edith | cecilia")->required();
    figure->add_option("--pmax", pmax, "Exclusive upper bound on p")->capture_default_str();
    figure->add_option("--out", out_path, "Output path (default stdout)");
    figure->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    figure->add_option("--lambda", figure_lambda, "Length ratio for boris/edith (default: the optimum)");

    auto* pair = app.add_subcommand("pair", "Correlation report for one sequence pair");
    std::uint32_t p = 0;
    char left = 'f';
    char right = 'g';
    bool natural = false;
    bool appended = false;
    std::optional<std::int64_t> shift;
    std::optional<std::size_t> length;
    std::optional<double> pair_lambda;
    bool json = false;
    pair->add_option("--p", p, "Prime")->required();
    pair->add_option("--left", left, "f | g | h")->required();
    pair->add_option("--right", right, "f | g | h")->required();
    auto* nat_flag = pair->add_flag("--natural", natural, "Shift (p-1)/4, length p (default)");
    auto* app_flag = pair->add_flag("--appended", appended, "Shift round(p(3-2L)/4), length round(pL)");
    auto* shift_opt = pair->add_option("--shift", shift, "Explicit shift");
    auto* length_opt = pair->add_option("--length", length, "Explicit length");
    pair->add_option("--lambda", pair_lambda, "L for --appended (default: the optimum)");
    pair->add_flag("--json", json, "Emit JSON");
    nat_flag->excludes(app_flag)->excludes(shift_opt)->excludes(length_opt);
    app_flag->excludes(shift_opt)->excludes(length_opt);
    shift_opt->needs(length_opt);
    length_opt->needs(shift_opt);

    auto* verify = app.add_subcommand("verify", "Run every invariant suite");
    auto* constants = app.add_subcommand("constants", "Print the limit constants as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (figure->parsed()) {
            charseq::ExperimentConfig cfg;
            cfg.figure = charseq::parse_figure(figure_id);
            cfg.p_max = pmax;
            cfg.jobs = jobs;
            cfg.lambda = figure_lambda;
            return write_output(charseq::to_csv(charseq::run_figure(cfg)), out_path);
        }
        if (pair->parsed()) {
            charseq::PairRequest req;
            req.p = p;
            req.left = charseq::parse_family(left);
            req.right = charseq::parse_family(right);
            req.lambda = pair_lambda;
            if (appended) {
                req.mode = charseq::ParamMode::Appended;
            } else if (shift) {
                req.mode = charseq::ParamMode::Explicit;
                req.shift = *shift;
                req.length = *length;
            }
            const auto report = charseq::run_pair(req);
            std::cout << (json ? charseq::pair_report_json(report) : charseq::pair_report_text(report));
            return kOk;
        }
        if (verify->parsed()) {
            const auto results = charseq::all_checks();
            std::cout << charseq::format_checks(results);
            return charseq::all_passed(results) ? kOk : kVerifyFailed;
        }
        if (constants->parsed()) {
            std::cout << charseq::constants_csv(charseq::run_constants());
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
