#pragma once

// Figure regeneration as CSV tables, single-pair reports, and the constants table.

#include "charseq/correlate.hpp"
#include "charseq/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charseq {

enum class Figure { Aaron, Edward, Boris, Edith, Cecilia };

/// Throws std::invalid_argument on an unknown name.
Figure parse_figure(const std::string& name);
std::string figure_name(Figure figure);

struct ExperimentConfig {
    Figure figure = Figure::Aaron;
    std::uint32_t p_max = 2000;
    std::optional<double> lambda; // appended figures only; default is the optimum
    unsigned jobs = 1;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Index of a header column; throws std::out_of_range if absent.
    std::size_t column(const std::string& name) const;
};

/// Header line plus one line per row, comma separated, LF endings, %.9g.
std::string to_csv(const Table& table);

/// Primes p = 1 (mod 4) with 13 <= p < p_max, ascending.
std::vector<std::uint32_t> figure_primes(std::uint32_t p_max);

/// The `count` smallest primes of the form 1 + (2c)^2.
std::vector<std::uint32_t> cecilia_primes(std::size_t count);

/// Throws std::invalid_argument if p_max < 13 or jobs == 0.
Table run_figure(const ExperimentConfig& config);

enum class ParamMode { Natural, Appended, Explicit };

struct PairRequest {
    std::uint32_t p = 0;
    Family left = Family::F;
    Family right = Family::G;
    ParamMode mode = ParamMode::Natural;
    std::int64_t shift = 0;    // Explicit mode
    std::size_t length = 0;    // Explicit mode
    std::optional<double> lambda;
};

struct PairReport {
    PairRequest request;
    std::int64_t shift = 0;
    std::size_t length = 0;
    MeritReport merit;
    PairParameters direct;
    PairParameters table;
    double mean_square_residual = 0.0;
    double quadruple_residual = 0.0;
};

/// Sequences are unimodularized; parameters come from the tilde versions.
PairReport run_pair(const PairRequest& request);
std::string pair_report_text(const PairReport& report);
std::string pair_report_json(const PairReport& report);

struct NamedConstant {
    std::string name;
    double value;
};

std::vector<NamedConstant> run_constants();
std::string constants_csv(const std::vector<NamedConstant>& constants);

/// "%.9g".
std::string format_real(double x);

} // namespace charseq
