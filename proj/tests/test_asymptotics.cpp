#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charseq/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

using namespace charseq;

namespace {

constexpr double kHalfPi = 1.5707963267948966;

LimitInputs inputs(double s, double u, double v, double lambda) {
    LimitInputs in;
    in.s = s;
    in.u = u;
    in.v = v;
    in.lambda = lambda;
    return in;
}

} // namespace

TEST_CASE("omega values") {
    CHECK(omega(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(omega(0.5, 0.0) == doctest::Approx(1.5));
    CHECK(omega(1.0, 1.5) == doctest::Approx(0.5));
    CHECK(omega(-1.0, 1.5) == doctest::Approx(0.5));
    CHECK(omega(3.0, 5.0) == 0.0);
    CHECK_THROWS_AS(omega(0.0, 1.0), std::domain_error);
}

TEST_CASE("omega exact") {
    CHECK(omega_exact(Rational(1), Rational(0)) == Rational(1));
    CHECK(omega_exact(Rational(1, 2), Rational(0)) == Rational(3, 2));
    CHECK(omega_exact(Rational(1), Rational(3, 2)) == Rational(1, 2));
    CHECK(omega_exact(Rational(2, 7), Rational(1, 3)).value() == doctest::Approx(omega(2.0 / 7.0, 1.0 / 3.0)));
    CHECK_THROWS_AS(omega_exact(Rational(0), Rational(1)), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) / Rational(2)).str() == "1/6");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("general limit formulas") {
    CHECK(limit_cdf(inputs(0, 0, 0, 1)) == doctest::Approx(1.0));
    LimitInputs in = inputs(-2, 1, 1, 1);
    in.r = 0.25;
    CHECK(limit_df(in) == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS(limit_cdf(inputs(0, 1, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(limit_cdf(inputs(0, 0, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(limit_df(inputs(0, 0, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(limit_cdf(inputs(0, 0, 0, 0)), std::invalid_argument);

    LimitInputs full = inputs(0.5, 1, 1, 1);
    full.delta = 0.0;
    full.sigma = 0.0;
    CHECK(limit_cdf(full) == doctest::Approx(1.0 / 3.0 + 3.0));
}

TEST_CASE("specialized limits") {
    CHECK(limit_cdf_fg(1.0, kHalfPi) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(limit_cdf_fg(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(limit_cdf_fh(1.0) == doctest::Approx(1.0));
    CHECK(limit_df_quartic(1.0, 0.25, kHalfPi) == doctest::Approx(5.0 / 6.0));
    CHECK(limit_df_legendre(1.0, 0.25) == doctest::Approx(1.0 / 6.0));
    CHECK(limit_df_legendre_exact(Rational(1), Rational(1, 4)) == Rational(1, 6));

    const double lambda = optimum_constants().lambda_app;
    const double r = appended_offset(lambda);
    CHECK(std::abs(limit_df_legendre(lambda, r) - 0.157677) < 1e-5);
    CHECK(std::abs(limit_df_quartic(lambda, r, 0.0) - 0.157677) < 1e-5);
    CHECK(std::abs(limit_df_quartic(lambda, r, 0.0) - (0.510286 - 0.352609)) < 1e-5);
    CHECK(std::abs(limit_cdf_fg(lambda, kHalfPi) - 0.300758) < 1e-5);
}

TEST_CASE("optimum constants") {
    const OptimumConstants c = optimum_constants();
    CHECK(std::abs(c.df_min - 0.157677) < 1e-6);
    CHECK(std::abs(c.mf_max - 6.342061) < 1e-6);
    CHECK(std::abs(c.lambda_app - 1.057827) < 1e-6);
    CHECK(std::abs(c.df_min * c.mf_max - 1.0) < 1e-9);
    const double x = c.df_min;
    CHECK(std::abs(((27 * x - 417) * x + 249) * x - 29) < 1e-9);
    const double l = c.lambda_app;
    CHECK(std::abs((4 * l * l - 30) * l + 27) < 1e-9);
}

TEST_CASE("root finder picks the sign change nearest the guess") {
    // Roots 0.2 and 0.6 both lie within 0.5 of 0.3.
    const auto poly = [](double x) { return (x - 0.2) * (x - 0.6); };
    CHECK(bisect_root_near(poly, 0.3) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(bisect_root_near(poly, 0.5) == doctest::Approx(0.6).epsilon(1e-10));
    CHECK_THROWS_AS(bisect_root_near([](double x) { return x * x + 1.0; }, 0.0), std::runtime_error);
}

TEST_CASE("PSC limits") {
    CHECK(psc_limit_natural() == Rational(7, 6));
    CHECK(std::abs(psc_limit_appended(0.0) - 1.163654) < 1e-5);
    CHECK(std::abs(psc_limit_appended(0.0) - psc_limit_appended(kHalfPi)) < 1e-9);
    const AppendedLimitCoefficients h = appended_limit_coefficients();
    CHECK(std::abs(h.df_constant - 0.510286) < 1e-6);
    CHECK(std::abs(h.df_cos_coefficient + 0.352609) < 1e-6);
    CHECK(std::abs(h.cdf_constant - 0.653368) < 1e-6);
    CHECK(std::abs(h.cdf_cos_coefficient - 0.352609) < 1e-6);
}
