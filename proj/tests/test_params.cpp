#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charseq/correlate.hpp"
#include "charseq/params.hpp"

#include <cmath>
#include <stdexcept>

using namespace charseq;

namespace {

CharCombination family_comb(std::uint32_t p, Family fam) {
    return combination_coefficients(family_spec(PrimeField::make(p), fam));
}

} // namespace

TEST_CASE("Legendre pair parameters") {
    for (std::uint32_t p : {7u, 11u, 13u, 101u}) {
        const auto h = family_comb(p, Family::H);
        const PairParameters prm = parameters_from_combinations(h, h);
        CHECK(prm.s == doctest::Approx(-2.0));
        CHECK(prm.u == doctest::Approx(1.0));
        CHECK(prm.v == doctest::Approx(1.0));
        CHECK(prm.w_f == doctest::Approx(1.0));
    }
}

TEST_CASE("quartic pair parameters at p = 13") {
    const auto f = family_comb(13, Family::F);
    const auto g = family_comb(13, Family::G);
    const PairParameters fg = parameters_from_combinations(f, g);
    CHECK(fg.u == doctest::Approx(0.0));
    CHECK(fg.v == doctest::Approx(0.0));
    CHECK(fg.s == doctest::Approx(-4.0 / 13.0));
    const PairParameters ff = parameters_from_combinations(f, f);
    CHECK(ff.s == doctest::Approx(-22.0 / 13.0));
    CHECK(ff.u == doctest::Approx(1.0));
    CHECK(ff.w_f == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("parameters reject mismatched fields") {
    CHECK_THROWS_AS(parameters_from_combinations(family_comb(13, Family::F), family_comb(17, Family::F)),
                    std::invalid_argument);
}

TEST_CASE("family table") {
    const PairParameters fg = family_table(13, Family::F, Family::G);
    CHECK(fg.s == doctest::Approx(-4.0 / 13.0));
    CHECK(fg.u == 0.0);
    const PairParameters fh = family_table(17, Family::F, Family::H);
    CHECK(fh.s == 0.0);
    CHECK(fh.u == 0.0);
    CHECK(fh.v == 0.0);
    CHECK(fh.w_f == doctest::Approx(std::sqrt(2.0)));
    CHECK(fh.w_g == 1.0);
    CHECK(family_table(29, Family::G, Family::G).w_g == doctest::Approx(std::sqrt(2.0)));
    CHECK(family_table(7, Family::H, Family::H).s == -2.0);
    CHECK_THROWS_AS(family_table(7, Family::F, Family::H), std::domain_error);

    for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 61u, 73u, 89u, 97u}) {
        for (Family a : {Family::F, Family::G, Family::H}) {
            for (Family b : {Family::F, Family::G, Family::H}) {
                const PairParameters direct = parameters_from_combinations(family_comb(p, a), family_comb(p, b));
                const PairParameters tab = family_table(p, a, b);
                CHECK(direct.s == doctest::Approx(tab.s).epsilon(1e-9));
                CHECK(std::abs(direct.u - tab.u) < 1e-9);
                CHECK(std::abs(direct.v - tab.v) < 1e-9);
            }
        }
    }
}

TEST_CASE("closed-form U and V") {
    auto [u, v] = closed_form_uv(2, {0, 1}, {0, 3}, 13);
    CHECK(u == doctest::Approx(0.0));
    std::tie(u, v) = closed_form_uv(2, {0, 1}, {0, 1}, 17);
    CHECK(u == doctest::Approx(1.0));
    CHECK(v == doctest::Approx(1.0));
    std::tie(u, v) = closed_form_uv(1, {0}, {0}, 7);
    CHECK(u == 1.0);
    CHECK(v == 1.0);
    // p = 13 is not 1 mod 8, so -B is B shifted by m.
    std::tie(u, v) = closed_form_uv(2, {0, 1}, {0, 1}, 13);
    CHECK(v == doctest::Approx(1.0));
    std::tie(u, v) = closed_form_uv(2, {0, 1}, {0, 3}, 13);
    CHECK(v == doctest::Approx(0.0));
    CHECK_THROWS_AS(closed_form_uv(2, {0, 1}, {0, 1}, 7), std::domain_error);

    for (std::uint32_t p : {7u, 13u, 19u, 37u, 43u}) {
        const FieldPtr f = PrimeField::make(p);
        const std::vector<std::uint32_t> a{0, 1, 4};
        const std::vector<std::uint32_t> b{1, 2, 3};
        const PairParameters prm = parameters_from_combinations(combination_coefficients(ResidueClassSpec(f, 3, a)),
                                                                combination_coefficients(ResidueClassSpec(f, 3, b)));
        const auto [cu, cv] = closed_form_uv(3, a, b, p);
        CHECK(std::abs(cu - prm.u) < 1e-9);
        CHECK(std::abs(cv - prm.v) < 1e-9);
    }
}

TEST_CASE("quadruple sum identities") {
    const auto h = family_comb(13, Family::H);
    CHECK(quadruple_sum_identities(h, h).max() < 1e-8);
    const auto f = family_comb(17, Family::F);
    const auto g = family_comb(17, Family::G);
    const QuadrupleSumResiduals r = quadruple_sum_identities(f, g);
    CHECK(r.max() < 1e-8);
    CHECK(r.diagonal < 1e-9);
}

TEST_CASE("periodic mean square equals S + 1 + U + V") {
    for (std::uint32_t p : {13u, 17u, 29u, 101u}) {
        const FieldPtr field = PrimeField::make(p);
        for (Family a : {Family::F, Family::G, Family::H}) {
            for (Family b : {Family::F, Family::G, Family::H}) {
                const auto sa = family_spec(field, a);
                const auto sb = family_spec(field, b);
                const PairParameters prm =
                    parameters_from_combinations(combination_coefficients(sa), combination_coefficients(sb));
                const double ms = mean_square_periodic(periodic_version(sa), periodic_version(sb));
                CHECK(std::abs(ms - (prm.s + 1.0 + prm.u + prm.v)) < 1e-6);
            }
        }
    }
}
