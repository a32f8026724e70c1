#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charseq/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace charseq;

namespace {

Sequence make_seq(std::vector<std::int8_t> terms) {
    Sequence s;
    s.terms = std::move(terms);
    return s;
}

ComplexSequence make_cseq(std::vector<cplx> terms) {
    ComplexSequence s;
    s.terms = std::move(terms);
    return s;
}

} // namespace

TEST_CASE("hand-computed aperiodic correlations") {
    const IntProfile c = cross_correlation(make_seq({1, 1}), make_seq({1, -1}));
    CHECK(c.min_shift == -1);
    CHECK(c.values == std::vector<std::int64_t>{1, 0, -1});
    CHECK(c.at(2) == 0);
    CHECK(c.at(-2) == 0);

    const IntProfile a = cross_correlation(make_seq({1, 1, -1}), make_seq({1, 1, -1}));
    CHECK(a.values == std::vector<std::int64_t>{-1, 0, 3, 0, -1});

    CHECK_THROWS_AS(cross_correlation(make_seq({1}), make_seq({1, 1})), std::invalid_argument);
}

TEST_CASE("demerit factors") {
    CHECK(cdf(make_seq({1, 1}), make_seq({1, -1})) == doctest::Approx(0.5));
    const Ratio r = df_exact(make_seq({1, 1, -1}));
    CHECK(r.num == 2);
    CHECK(r.den == 9);
    const Sequence f = unimodularize(quartic_f(13, 3, 13));
    CHECK(cdf(f, f) == doctest::Approx(df(f) + 1.0).epsilon(1e-12));
    CHECK_THROWS_AS(cdf(make_seq({0, 0}), make_seq({1, 1})), std::domain_error);
    CHECK_THROWS_AS(df(make_seq({0})), std::domain_error);
}

TEST_CASE("zero-shift autocorrelation of a binary sequence is its length") {
    const Sequence f = unimodularize(legendre_h(31, 7, 40));
    CHECK(cross_correlation(f, f).at(0) == 40);
}

TEST_CASE("merit report fields") {
    const Sequence f = unimodularize(quartic_f(29, 7, 29));
    const Sequence g = unimodularize(quartic_g(29, 7, 29));
    const MeritReport r = merit_report(f, g);
    CHECK(r.cmf == doctest::Approx(1.0 / r.cdf));
    CHECK(r.psc == doctest::Approx(std::sqrt(r.df_f * r.df_g) + r.cdf));
    CHECK(r.psc >= 1.0 - 1e-9);
    CHECK(psc(f, g) == doctest::Approx(r.psc));
}

TEST_CASE("complex correlation conjugates the second argument") {
    const ComplexSequence f = make_cseq({cplx{0, 1}, cplx{1, 0}});
    const ComplexSequence g = make_cseq({cplx{0, 1}, cplx{0, -1}});
    const ComplexProfile c = cross_correlation(f, g);
    // s=0: i*conj(i) + 1*conj(-i) = 1 + i
    CHECK(std::abs(c.at(0) - cplx{1, 1}) < 1e-15);
    // s=1: f0 conj(g1) = i * i = -1
    CHECK(std::abs(c.at(1) - cplx{-1, 0}) < 1e-15);
    // s=-1: f1 conj(g0) = -i
    CHECK(std::abs(c.at(-1) - cplx{0, -1}) < 1e-15);
    CHECK(df(f) == doctest::Approx(0.5));
}

TEST_CASE("complex path matches the integer path on binary input") {
    const Sequence f = unimodularize(quartic_f(37, 9, 45));
    const Sequence g = unimodularize(legendre_h(37, 9, 45));
    ComplexSequence cf;
    ComplexSequence cg;
    for (auto t : f.terms) cf.terms.emplace_back(t);
    for (auto t : g.terms) cg.terms.emplace_back(t);
    CHECK(cdf(cf, cg) == doctest::Approx(cdf(f, g)).epsilon(1e-12));
}

TEST_CASE("fast kernel agrees with direct summation") {
    std::mt19937 rng(7);
    for (std::size_t len : {1u, 2u, 3u, 17u, 64u, 255u, 1000u}) {
        Sequence f;
        Sequence g;
        for (std::size_t i = 0; i < len; ++i) {
            f.terms.push_back(static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1));
            g.terms.push_back(static_cast<std::int8_t>(static_cast<int>(rng() % 3) - 1));
        }
        const IntProfile direct = cross_correlation(f, g);
        const IntProfile fast = cross_correlation_fft(f, g);
        CHECK(direct.values == fast.values);
        double total = 0.0;
        for (auto v : direct.values) total += static_cast<double>(v * v);
        CHECK(std::abs(sum_squared_correlation_fft(f, g) - total) <= 1e-9 * std::max(total, 1.0));
    }
    const Sequence f = unimodularize(quartic_f(401, 100, 401));
    const Sequence g = unimodularize(quartic_g(401, 100, 401));
    CHECK(cdf_fft(f, g) == doctest::Approx(cdf(f, g)).epsilon(1e-12));
}

TEST_CASE("periodic versions") {
    const FieldPtr f5 = PrimeField::make(5);
    const auto pf = periodic_version(family_spec(f5, Family::F));
    CHECK(std::vector<int>(pf.begin(), pf.end()) == std::vector<int>{0, 1, 1, -1, -1});
    const auto ph = periodic_version(family_spec(PrimeField::make(7), Family::H));
    CHECK(std::vector<int>(ph.begin(), ph.end()) == std::vector<int>{0, 1, 1, -1, 1, -1, -1});
    const auto pc = periodic_version(combination_coefficients(family_spec(f5, Family::F)));
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(pc[i] - cplx{static_cast<double>(pf[i])}) < 1e-12);
}

TEST_CASE("periodic correlation") {
    const std::vector<std::int8_t> u{1, 1, -1};
    CHECK(periodic_cross_correlation(u, u) == std::vector<std::int64_t>{3, -1, -1});

    const auto ph = periodic_version(family_spec(PrimeField::make(7), Family::H));
    const auto pc = periodic_cross_correlation(ph, ph);
    CHECK(pc[0] == 6);
    for (std::size_t s = 1; s < 7; ++s) CHECK(pc[s] == -1);
    CHECK(mean_square_periodic(ph, ph) == doctest::Approx(1.0));

    const std::vector<std::int8_t> w{1, 0, -1};
    CHECK_THROWS_AS(periodic_cross_correlation(u, std::vector<std::int8_t>{1, 1}), std::invalid_argument);
    CHECK(periodic_cross_correlation(w, w)[0] == 2);
}

TEST_CASE("finite Fourier transform") {
    const std::vector<cplx> ones(4, cplx{1.0});
    const auto h = dft(ones);
    CHECK(std::abs(h[0] - cplx{4.0}) < 1e-12);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(h[i]) < 1e-12);

    const auto per = periodic_version(combination_coefficients(family_spec(PrimeField::make(13), Family::G)));
    const auto ph = dft(per);
    CHECK(std::abs(ph[0]) < 1e-9);
    double energy = 0.0;
    for (std::size_t i = 1; i < ph.size(); ++i) energy += std::norm(ph[i]);
    CHECK(energy == doctest::Approx(13.0 * 12.0));
    const auto back = inverse_dft(ph);
    for (std::size_t i = 0; i < per.size(); ++i) CHECK(std::abs(back[i] - per[i]) < 1e-9);
    CHECK_THROWS_AS(dft(std::vector<cplx>{}), std::invalid_argument);
}
