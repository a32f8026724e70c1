#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charseq/ff_char.hpp"

#include <cmath>
#include <stdexcept>

using namespace charseq;

TEST_CASE("primitive roots are the smallest generators") {
    CHECK(find_primitive_root(5) == 2);
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(13) == 2);
    CHECK(find_primitive_root(23) == 5);
    CHECK_THROWS_AS(find_primitive_root(9), std::invalid_argument);
    CHECK_THROWS_AS(find_primitive_root(2), std::invalid_argument);
    CHECK_THROWS_AS(find_primitive_root(1), std::invalid_argument);
}

TEST_CASE("dlog table inverts powers") {
    for (std::uint32_t p : {3u, 5u, 7u, 13u, 101u, 997u}) {
        const FieldPtr f = PrimeField::make(p);
        CHECK(check_dlog_bijection(*f));
        for (std::uint32_t x = 1; x < p; ++x) CHECK(f->power(f->dlog(x)) == x);
    }
    const FieldPtr f = PrimeField::make(7);
    CHECK_THROWS_AS(f->dlog(0), std::invalid_argument);
    CHECK_THROWS_AS(f->dlog(7), std::invalid_argument);
}

TEST_CASE("corrupted dlog table is rejected") {
    const FieldPtr good = PrimeField::make(11);
    auto table = good->dlog_table();
    table[4] = table[5];
    CHECK_FALSE(check_dlog_bijection(*PrimeField::from_table(11, good->alpha(), table)));
}

TEST_CASE("character values") {
    const FieldPtr f5 = PrimeField::make(5);
    const auto eta = MultiplicativeCharacter::quadratic(f5);
    CHECK(std::abs(eta(4) - cplx{1.0}) < 1e-12);
    CHECK(std::abs(eta(2) - cplx{-1.0}) < 1e-12);
    CHECK(eta(0) == cplx{});
    CHECK_THROWS_AS(eta(5), std::invalid_argument);

    const FieldPtr f7 = PrimeField::make(7);
    CHECK(MultiplicativeCharacter::trivial(f7)(3) == cplx{1.0});

    const auto theta = MultiplicativeCharacter::quartic(PrimeField::make(13));
    CHECK(theta.order() == 4);
    CHECK(std::abs(theta(2) - cplx{0.0, 1.0}) < 1e-12);
    CHECK(theta.conj().exponent() == 9);
    CHECK_THROWS_AS(MultiplicativeCharacter::quartic(f7), std::domain_error);
}

TEST_CASE("character homomorphism and minus one") {
    const FieldPtr f = PrimeField::make(17);
    for (std::uint32_t k = 0; k < 16; ++k) {
        const MultiplicativeCharacter chi(f, k);
        CHECK(std::abs(chi(16) - cplx{static_cast<double>(chi.at_minus_one())}) < 1e-12);
        for (std::uint32_t a = 1; a < 17; ++a) {
            for (std::uint32_t b = 1; b < 17; ++b) CHECK(std::abs(chi(a * b % 17) - chi(a) * chi(b)) < 1e-12);
        }
    }
}

TEST_CASE("gauss sums") {
    const FieldPtr f5 = PrimeField::make(5);
    CHECK(std::abs(gauss_sum(MultiplicativeCharacter::trivial(f5)) - cplx{-1.0}) < 1e-12);
    const auto eta = MultiplicativeCharacter::quadratic(f5);
    CHECK(std::abs(gauss_sum(eta) - cplx{std::sqrt(5.0)}) < 1e-12);
    CHECK(std::abs(gauss_sum_general(2, eta) + cplx{std::sqrt(5.0)}) < 1e-12);
    CHECK(std::abs(gauss_sum_direct(2, eta) + cplx{std::sqrt(5.0)}) < 1e-12);
    CHECK(std::abs(gauss_sum_general(1, eta) - gauss_sum(eta)) < 1e-12);

    const FieldPtr f7 = PrimeField::make(7);
    CHECK(gauss_sum_general(0, MultiplicativeCharacter::trivial(f7)) == cplx{6.0});

    const FieldPtr f13 = PrimeField::make(13);
    for (std::uint32_t k = 1; k < 12; ++k) CHECK(std::norm(gauss_sum(MultiplicativeCharacter(f13, k))) == doctest::Approx(13.0).epsilon(1e-9));
}

TEST_CASE("additive characters") {
    const FieldPtr f = PrimeField::make(7);
    CHECK(std::abs(AdditiveCharacter(f, 0)(5) - cplx{1.0}) < 1e-15);
    CHECK(std::abs(AdditiveCharacter(f, 1)(-1) - AdditiveCharacter(f, 1)(6)) < 1e-12);
    CHECK_THROWS_AS(AdditiveCharacter(f, 7), std::invalid_argument);
}

TEST_CASE("two squares against a brute-force oracle") {
    auto brute = [](std::uint32_t p) {
        for (std::uint32_t a = 1; a * a < p; a += 2) {
            for (std::uint32_t b = 2; a * a + b * b <= p; b += 2) {
                if (a * a + b * b == p) return std::pair{a, b};
            }
        }
        return std::pair{0u, 0u};
    };
    for (std::uint32_t p = 5; p < 3000; p += 4) {
        if (!is_prime(p)) continue;
        const TwoSquares ts = two_squares(p);
        const auto [a, b] = brute(p);
        CHECK(ts.a == a);
        CHECK(ts.b == b);
        CHECK(ts.gamma > 0.0);
        CHECK(ts.gamma < kTwoPi / 4.0);
    }
    CHECK(two_squares(5).a == 1);
    CHECK(two_squares(5).b == 2);
    CHECK(two_squares(13).a == 3);
    CHECK(two_squares(17).b == 4);
    CHECK_THROWS_AS(two_squares(7), std::domain_error);
    CHECK_THROWS_AS(two_squares(21), std::domain_error);
}

TEST_CASE("cos 2 gamma exact and from Gauss sums") {
    CHECK(cos_two_gamma(5) == doctest::Approx(-0.6).epsilon(1e-15));
    CHECK(cos_two_gamma(13) == doctest::Approx(5.0 / 13.0).epsilon(1e-15));
    CHECK(cos_two_gamma(17) == doctest::Approx(-15.0 / 17.0).epsilon(1e-15));
    for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 97u, 401u}) {
        CHECK(std::abs(cos_two_gamma(p) - cos_two_gamma_from_gauss_sum(PrimeField::make(p))) < 1e-6);
    }
}
