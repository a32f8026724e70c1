#include "charseq/experiments.hpp"

#include "charseq/asymptotics.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace charseq {

Figure parse_figure(const std::string& name) {
    if (name == "aaron") return Figure::Aaron;
    if (name == "edward") return Figure::Edward;
    if (name == "boris") return Figure::Boris;
    if (name == "edith") return Figure::Edith;
    if (name == "cecilia") return Figure::Cecilia;
    throw std::invalid_argument("unknown figure '" + name + "'");
}

std::string figure_name(Figure figure) {
    switch (figure) {
    case Figure::Aaron: return "aaron";
    case Figure::Edward: return "edward";
    case Figure::Boris: return "boris";
    case Figure::Edith: return "edith";
    case Figure::Cecilia: return "cecilia";
    }
    return "?";
}

std::size_t Table::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::out_of_range("no column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_real(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::uint32_t> figure_primes(std::uint32_t p_max) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 13; p < p_max; p += 4) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::vector<std::uint32_t> cecilia_primes(std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t c = 1; out.size() < count; ++c) {
        const std::uint64_t n = 1 + 4 * c * c;
        if (n > UINT32_MAX) throw std::overflow_error("prime search ran past 32 bits");
        if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
    }
    return out;
}

namespace {

// Evaluates fn(item) for every item over `jobs` workers; results keep input order.
template <class Item, class Fn>
std::vector<std::vector<double>> parallel_rows(const std::vector<Item>& items, unsigned jobs, Fn fn) {
    std::vector<std::vector<double>> rows(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                rows[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

struct Geometry {
    double lambda;
    double r;
    bool appended;
};

ShiftLength window_for(std::uint32_t p, const Geometry& geo) {
    return geo.appended ? appended_params(p, geo.lambda) : natural_params(p);
}

std::vector<double> quartic_row(std::uint32_t p, const Geometry& geo) {
    const FieldPtr field = PrimeField::make(p);
    const double c = cos_two_gamma(p);
    const ShiftLength w = window_for(p, geo);
    const Sequence f = unimodularize(quartic_f(field, w.shift, w.length));
    const Sequence g = unimodularize(quartic_g(field, w.shift, w.length));
    return {static_cast<double>(p),
            c,
            df(f),
            df(g),
            cdf(f, g),
            limit_df_quartic_cos(geo.lambda, geo.r, c),
            limit_cdf_fg_cos(geo.lambda, c)};
}

std::vector<double> legendre_row(std::uint32_t p, const Geometry& geo) {
    const FieldPtr field = PrimeField::make(p);
    const double c = cos_two_gamma(p);
    const ShiftLength w = window_for(p, geo);
    const Sequence f = unimodularize(quartic_f(field, w.shift, w.length));
    const Sequence h = unimodularize(legendre_h(field, w.shift, w.length));
    return {static_cast<double>(p),
            c,
            df(f),
            df(h),
            cdf(f, h),
            limit_df_quartic_cos(geo.lambda, geo.r, c),
            limit_df_legendre(geo.lambda, geo.r),
            limit_cdf_fh(geo.lambda)};
}

constexpr std::size_t kDirectLimit = 4096;

std::vector<double> cecilia_row(const std::pair<int, std::uint32_t>& item) {
    const auto [k, p] = item;
    const double frac = k / 10.0;
    const ShiftLength w = appended_params(p, frac);
    const FieldPtr field = PrimeField::make(p);
    const Sequence f = unimodularize(quartic_f(field, w.shift, w.length));
    const Sequence g = unimodularize(quartic_g(field, w.shift, w.length));
    const double value = w.length <= kDirectLimit ? cdf(f, g) : cdf_fft(f, g);
    return {static_cast<double>(k), static_cast<double>(p), frac, value, limit_cdf_fg_cos(frac, -1.0)};
}

} // namespace

Table run_figure(const ExperimentConfig& config) {
    if (config.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
    Table table;
    if (config.figure == Figure::Cecilia) {
        table.header = {"k", "p_k", "fractional_length", "cdf", "asym_curve"};
        const auto primes = cecilia_primes(100);
        std::vector<std::pair<int, std::uint32_t>> items;
        for (std::size_t i = 0; i < primes.size(); ++i) items.emplace_back(static_cast<int>(i + 1), primes[i]);
        table.rows = parallel_rows(items, config.jobs, cecilia_row);
        return table;
    }

    if (config.p_max < 13) throw std::invalid_argument("pmax must be at least 13");
    const bool appended = config.figure == Figure::Boris || config.figure == Figure::Edith;
    Geometry geo{1.0, 0.25, appended};
    if (appended) {
        geo.lambda = config.lambda.value_or(optimum_constants().lambda_app);
        if (!(geo.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
        geo.r = appended_offset(geo.lambda);
    }
    const std::string tag = appended ? "app" : "nat";
    const auto primes = figure_primes(config.p_max);

    if (config.figure == Figure::Aaron || config.figure == Figure::Boris) {
        table.header = {"p", "cos2gamma", "df_f_" + tag, "df_g_" + tag, "cdf_fg_" + tag, "asym_df", "asym_cdf"};
        table.rows = parallel_rows(primes, config.jobs, [&](std::uint32_t p) { return quartic_row(p, geo); });
    } else {
        table.header = {"p", "cos2gamma", "df_f_" + tag, "df_h_" + tag, "cdf_fh_" + tag,
                        "asym_df_f", "asym_df_h", "asym_cdf_fh"};
        table.rows = parallel_rows(primes, config.jobs, [&](std::uint32_t p) { return legendre_row(p, geo); });
    }
    return table;
}

PairReport run_pair(const PairRequest& request) {
    const std::uint32_t p = request.p;
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    const FieldPtr field = PrimeField::make(p);

    PairReport report;
    report.request = request;
    ShiftLength w{};
    switch (request.mode) {
    case ParamMode::Natural: w = natural_params(p); break;
    case ParamMode::Appended: w = appended_params(p, request.lambda.value_or(optimum_constants().lambda_app)); break;
    case ParamMode::Explicit:
        if (request.length == 0) throw std::invalid_argument("length must be positive");
        w = {request.shift, request.length};
        break;
    }
    report.shift = w.shift;
    report.length = w.length;

    const ResidueClassSpec left = family_spec(field, request.left);
    const ResidueClassSpec right = family_spec(field, request.right);
    const Sequence f = unimodularize(residue_class_sequence(left, w.shift, w.length));
    const Sequence g = unimodularize(residue_class_sequence(right, w.shift, w.length));
    report.merit = merit_report(f, g);

    const CharCombination fc = combination_coefficients(left);
    const CharCombination gc = combination_coefficients(right);
    report.direct = parameters_from_combinations(fc, gc);
    report.table = family_table(p, request.left, request.right);

    const auto per_f = periodic_version(left);
    const auto per_g = periodic_version(right);
    const double ms = mean_square_periodic(per_f, per_g);
    report.mean_square_residual = std::abs(ms - (report.direct.s + 1.0 + report.direct.u + report.direct.v));
    report.quadruple_residual = quadruple_sum_identities(fc, gc).max();
    return report;
}

namespace {

std::string mode_name(ParamMode mode) {
    switch (mode) {
    case ParamMode::Natural: return "natural";
    case ParamMode::Appended: return "appended";
    case ParamMode::Explicit: return "explicit";
    }
    return "?";
}

nlohmann::ordered_json params_json(const PairParameters& prm) {
    return {{"S", prm.s}, {"U", prm.u}, {"V", prm.v}, {"W_left", prm.w_f}, {"W_right", prm.w_g}};
}

std::string ratio_str(const Ratio& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

} // namespace

std::string pair_report_text(const PairReport& r) {
    std::ostringstream os;
    os << "p " << r.request.p << "\n"
       << "pair " << family_letter(r.request.left) << "," << family_letter(r.request.right) << "\n"
       << "mode " << mode_name(r.request.mode) << "\n"
       << "shift " << r.shift << "\n"
       << "length " << r.length << "\n"
       << "cdf " << format_real(r.merit.cdf) << " (" << ratio_str(r.merit.cdf_exact) << ")\n"
       << "cmf " << format_real(r.merit.cmf) << "\n"
       << "df_left " << format_real(r.merit.df_f) << " (" << ratio_str(r.merit.df_f_exact) << ")\n"
       << "df_right " << format_real(r.merit.df_g) << " (" << ratio_str(r.merit.df_g_exact) << ")\n"
       << "psc " << format_real(r.merit.psc) << "\n";
    auto params = [&](const char* label, const PairParameters& prm) {
        os << label << " S=" << format_real(prm.s) << " U=" << format_real(prm.u) << " V=" << format_real(prm.v)
           << " W_left=" << format_real(prm.w_f) << " W_right=" << format_real(prm.w_g) << "\n";
    };
    params("params_direct", r.direct);
    params("params_table", r.table);
    os << "mean_square_residual " << format_real(r.mean_square_residual) << "\n"
       << "quadruple_residual " << format_real(r.quadruple_residual) << "\n";
    return os.str();
}

std::string pair_report_json(const PairReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.request.p;
    j["left"] = std::string(1, family_letter(r.request.left));
    j["right"] = std::string(1, family_letter(r.request.right));
    j["mode"] = mode_name(r.request.mode);
    j["shift"] = r.shift;
    j["length"] = r.length;
    j["merit"] = {{"cdf", r.merit.cdf},
                  {"cdf_exact", ratio_str(r.merit.cdf_exact)},
                  {"cmf", std::isfinite(r.merit.cmf) ? nlohmann::ordered_json(r.merit.cmf) : nlohmann::ordered_json(nullptr)},
                  {"df_left", r.merit.df_f},
                  {"df_left_exact", ratio_str(r.merit.df_f_exact)},
                  {"df_right", r.merit.df_g},
                  {"df_right_exact", ratio_str(r.merit.df_g_exact)},
                  {"psc", r.merit.psc}};
    j["params_direct"] = params_json(r.direct);
    j["params_table"] = params_json(r.table);
    j["mean_square_residual"] = r.mean_square_residual;
    j["quadruple_residual"] = r.quadruple_residual;
    return j.dump(2) + "\n";
}

std::vector<NamedConstant> run_constants() {
    const OptimumConstants oc = optimum_constants();
    const AppendedLimitCoefficients h = appended_limit_coefficients();
    const double omega_app = limit_cdf_fh(oc.lambda_app);
    return {
        {"df_min", oc.df_min},
        {"mf_max", oc.mf_max},
        {"lambda_app", oc.lambda_app},
        {"psc_natural", psc_limit_natural().value()},
        {"psc_appended", psc_limit_appended(0.0)},
        {"appended_df_constant", h.df_constant},
        {"appended_df_cos2gamma_coefficient", h.df_cos_coefficient},
        {"appended_cdf_constant", h.cdf_constant},
        {"appended_cdf_cos2gamma_coefficient", h.cdf_cos_coefficient},
        {"cdf_fh_appended", omega_app},
        {"cmf_fh_appended", 1.0 / omega_app},
        {"df_legendre_natural", limit_df_legendre(1.0, 0.25)},
        {"cdf_fg_min_natural", limit_cdf_fg(1.0, kTwoPi / 4.0)},
    };
}

std::string constants_csv(const std::vector<NamedConstant>& constants) {
    std::string out = "name,value\n";
    for (const auto& c : constants) out += c.name + "," + format_real(c.value) + "\n";
    return out;
}

} // namespace charseq
