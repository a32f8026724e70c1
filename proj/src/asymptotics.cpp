#include "charseq/asymptotics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace charseq {

double omega(double x, double y) {
    if (x == 0.0) throw std::domain_error("Omega(x, y) needs x != 0");
    double lo = (y - 1.0) / x;
    double hi = (y + 1.0) / x;
    if (lo > hi) std::swap(lo, hi);
    double total = 0.0;
    for (auto n = static_cast<std::int64_t>(std::ceil(lo)); n <= static_cast<std::int64_t>(std::floor(hi)); ++n) {
        const double t = 1.0 - std::abs(static_cast<double>(n) * x - y);
        if (t > 0.0) total += t * t;
    }
    return total;
}

namespace {

Rational make_checked(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) throw std::overflow_error("rational overflow");
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    return make_checked(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}
bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::int64_t Rational::floor() const {
    const std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
}

Rational omega_exact(const Rational& x, const Rational& y) {
    if (x.num() == 0) throw std::domain_error("Omega(x, y) needs x != 0");
    const Rational one(1);
    Rational lo = (y - one) / x;
    Rational hi = (y + one) / x;
    if (hi < lo) std::swap(lo, hi);
    Rational total(0);
    for (std::int64_t n = lo.floor(); n <= hi.floor() + 1; ++n) {
        Rational d = Rational(n) * x - y;
        if (d < Rational(0)) d = Rational(0) - d;
        if (d < one) {
            const Rational t = one - d;
            total = total + t * t;
        }
    }
    return total;
}

namespace {

void require_lambda(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("Lambda must be positive");
}

} // namespace

double limit_cdf(const LimitInputs& in) {
    require_lambda(in.lambda);
    const double inv = 1.0 / in.lambda;
    double out = in.s * 2.0 * in.lambda / 3.0 + omega(inv, 0.0);
    if (in.u != 0.0) {
        if (!in.delta) throw std::invalid_argument("Delta is required when U != 0");
        out += in.u * omega(inv, *in.delta / in.lambda);
    }
    if (in.v != 0.0) {
        if (!in.sigma) throw std::invalid_argument("Sigma is required when V != 0");
        out += in.v * omega(inv, 1.0 + *in.sigma / in.lambda);
    }
    return out;
}

double limit_df(const LimitInputs& in) {
    require_lambda(in.lambda);
    const double inv = 1.0 / in.lambda;
    double out = -1.0 + in.s * 2.0 * in.lambda / 3.0 + 2.0 * omega(inv, 0.0);
    if (in.v != 0.0) {
        if (!in.r) throw std::invalid_argument("R is required when V != 0");
        out += in.v * omega(inv, 1.0 + 2.0 * *in.r / in.lambda);
    }
    return out;
}

double limit_df_quartic_cos(double lambda, double r, double c) {
    require_lambda(lambda);
    const double inv = 1.0 / lambda;
    return -1.0 - (3.0 + c) * lambda / 3.0 + 2.0 * omega(inv, 0.0) + omega(inv, 1.0 + 2.0 * r / lambda);
}

double limit_df_quartic(double lambda, double r, double gamma) {
    return limit_df_quartic_cos(lambda, r, std::cos(2.0 * gamma));
}

double limit_df_legendre(double lambda, double r) {
    require_lambda(lambda);
    const double inv = 1.0 / lambda;
    return -1.0 - 4.0 * lambda / 3.0 + 2.0 * omega(inv, 0.0) + omega(inv, 1.0 + 2.0 * r / lambda);
}

Rational limit_df_legendre_exact(const Rational& lambda, const Rational& r) {
    if (!(Rational(0) < lambda)) throw std::invalid_argument("Lambda must be positive");
    const Rational inv = Rational(1) / lambda;
    return Rational(-1) - Rational(4, 3) * lambda + Rational(2) * omega_exact(inv, Rational(0)) +
           omega_exact(inv, Rational(1) + Rational(2) * r / lambda);
}

double limit_cdf_fg_cos(double lambda, double c) {
    require_lambda(lambda);
    return (-1.0 + c) * lambda / 3.0 + omega(1.0 / lambda, 0.0);
}

double limit_cdf_fg(double lambda, double gamma) { return limit_cdf_fg_cos(lambda, std::cos(2.0 * gamma)); }

double limit_cdf_fh(double lambda) {
    require_lambda(lambda);
    return omega(1.0 / lambda, 0.0);
}

double bisect_root_near(const std::function<double(double)>& poly, double guess) {
    constexpr int kCells = 4096;
    const double lo = guess - 0.5;
    const double step = 1.0 / kCells;
    double best_a = 0.0;
    double best_b = 0.0;
    double best_dist = INFINITY;
    for (int i = 0; i < kCells; ++i) {
        const double a = lo + i * step;
        const double b = a + step;
        const double fa = poly(a);
        const double fb = poly(b);
        if (fa == 0.0) return a;
        if ((fa < 0.0) != (fb < 0.0)) {
            const double dist = std::abs(0.5 * (a + b) - guess);
            if (dist < best_dist) {
                best_dist = dist;
                best_a = a;
                best_b = b;
            }
        }
    }
    if (!std::isfinite(best_dist)) throw std::runtime_error("no sign change near the guess");
    double a = best_a;
    double b = best_b;
    const bool a_negative = poly(a) < 0.0;
    while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double fm = poly(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == a_negative) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

OptimumConstants optimum_constants() {
    OptimumConstants c;
    c.df_min = bisect_root_near([](double x) { return ((27.0 * x - 417.0) * x + 249.0) * x - 29.0; }, 0.157677);
    c.mf_max = bisect_root_near([](double x) { return ((29.0 * x - 249.0) * x + 417.0) * x - 27.0; }, 6.342061);
    c.lambda_app = bisect_root_near([](double x) { return (4.0 * x * x - 30.0) * x + 27.0; }, 1.057827);
    c.r_offsets = "(1 - 2 lambda)/4 + n/2, n integer";
    return c;
}

Rational psc_limit_natural() { return {7, 6}; }

double appended_offset(double lambda) { return (3.0 - 2.0 * lambda) / 4.0; }

double psc_limit_appended(double gamma) {
    const double lambda = optimum_constants().lambda_app;
    const double c = std::cos(2.0 * gamma);
    const double df = limit_df_quartic_cos(lambda, appended_offset(lambda), c);
    return std::abs(df) + limit_cdf_fg_cos(lambda, c);
}

AppendedLimitCoefficients appended_limit_coefficients() {
    const double lambda = optimum_constants().lambda_app;
    const double r = appended_offset(lambda);
    AppendedLimitCoefficients h;
    h.df_constant = limit_df_quartic_cos(lambda, r, 0.0);
    h.df_cos_coefficient = limit_df_quartic_cos(lambda, r, 1.0) - h.df_constant;
    h.cdf_constant = limit_cdf_fg_cos(lambda, 0.0);
    h.cdf_cos_coefficient = limit_cdf_fg_cos(lambda, 1.0) - h.cdf_constant;
    return h;
}

} // namespace charseq
