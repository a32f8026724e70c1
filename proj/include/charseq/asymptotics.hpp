#pragma once

// The Omega kernel, limiting demerit factors, and the optimum constants for
// Legendre-type autocorrelation.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace charseq {

/// Omega(x, y) = sum_n max(0, 1 - |n x - y|)^2.  Throws std::domain_error for x = 0.
double omega(double x, double y);

/// Normalized fraction with a positive denominator.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);

    /// Largest integer <= this.
    std::int64_t floor() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

Rational omega_exact(const Rational& x, const Rational& y);

struct LimitInputs {
    double s = 0.0;
    double u = 0.0;
    double v = 0.0;
    double lambda = 1.0;
    std::optional<double> delta; // needed when u != 0
    std::optional<double> sigma; // needed when v != 0
    std::optional<double> r;     // needed by limit_df when v != 0
};

/// S 2Lambda/3 + Omega(1/Lambda, 0) + U Omega(1/Lambda, Delta/Lambda) + V Omega(1/Lambda, 1 + Sigma/Lambda).
/// Throws std::invalid_argument for Lambda <= 0 or a missing offset.
double limit_cdf(const LimitInputs& in);

/// -1 + S 2Lambda/3 + 2 Omega(1/Lambda, 0) + V Omega(1/Lambda, 1 + 2R/Lambda).
double limit_df(const LimitInputs& in);

/// Quartic f (or g) autocorrelation; `c` is cos 2gamma.
double limit_df_quartic_cos(double lambda, double r, double c);
double limit_df_quartic(double lambda, double r, double gamma);
double limit_df_legendre(double lambda, double r);
Rational limit_df_legendre_exact(const Rational& lambda, const Rational& r);

/// (f, g) crosscorrelation.
double limit_cdf_fg_cos(double lambda, double c);
double limit_cdf_fg(double lambda, double gamma);
/// (f, h) or (g, h) crosscorrelation.
double limit_cdf_fh(double lambda);

/// Root of `poly` by bisection to 1e-12, among the sign changes in
/// [guess - 0.5, guess + 0.5] picking the one nearest to `guess`.
/// Throws std::runtime_error if there is none.
double bisect_root_near(const std::function<double(double)>& poly, double guess);

struct OptimumConstants {
    double df_min = 0.0;
    double mf_max = 0.0;
    double lambda_app = 0.0;
    std::string r_offsets;
};

OptimumConstants optimum_constants();

/// 7/6 for every gamma.
Rational psc_limit_natural();
/// |df| + cdf for the quartic pair at the appended parameters.
double psc_limit_appended(double gamma);

/// Constant and cos 2gamma parts of the appended quartic limits.
struct AppendedLimitCoefficients {
    double df_constant = 0.0;
    double df_cos_coefficient = 0.0;
    double cdf_constant = 0.0;
    double cdf_cos_coefficient = 0.0;
};

AppendedLimitCoefficients appended_limit_coefficients();

/// R used with appended sequences: (3 - 2 Lambda)/4.
double appended_offset(double lambda);

} // namespace charseq
