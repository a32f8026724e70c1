#include "charseq/ff_char.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charseq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void require_odd_prime(std::uint32_t p) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
    }
}

} // namespace

std::uint32_t find_primitive_root(std::uint32_t p) {
    require_odd_prime(p);
    const auto factors = distinct_prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw std::logic_error("no primitive root found");
}

PrimeField::PrimeField(std::uint32_t p, std::uint32_t alpha, std::vector<std::uint32_t> dlog,
                       std::vector<std::uint32_t> pow)
    : p_(p), alpha_(alpha), dlog_(std::move(dlog)), table_pow_(std::move(pow)) {}

FieldPtr PrimeField::make(std::uint32_t p) {
    const std::uint32_t alpha = find_primitive_root(p);
    std::vector<std::uint32_t> dlog(p, 0);
    std::vector<std::uint32_t> pow(p - 1, 0);
    std::uint64_t x = 1;
    for (std::uint32_t e = 0; e < p - 1; ++e) {
        pow[e] = static_cast<std::uint32_t>(x);
        dlog[x] = e;
        x = x * alpha % p;
    }
    return FieldPtr(new PrimeField(p, alpha, std::move(dlog), std::move(pow)));
}

FieldPtr PrimeField::from_table(std::uint32_t p, std::uint32_t alpha, std::vector<std::uint32_t> dlog) {
    require_odd_prime(p);
    if (dlog.size() != p) throw std::invalid_argument("dlog table must have p entries");
    std::vector<std::uint32_t> pow(p - 1, 0);
    std::uint64_t x = 1;
    for (std::uint32_t e = 0; e < p - 1; ++e) {
        pow[e] = static_cast<std::uint32_t>(x);
        x = x * alpha % p;
    }
    return FieldPtr(new PrimeField(p, alpha, std::move(dlog), std::move(pow)));
}

std::uint32_t PrimeField::dlog(std::uint32_t a) const {
    if (a == 0 || a >= p_) throw std::invalid_argument("dlog argument must lie in 1..p-1");
    return dlog_[a];
}

bool check_dlog_bijection(const PrimeField& field) {
    const std::uint32_t p = field.p();
    const auto& table = field.dlog_table();
    if (table.size() != p) return false;
    std::vector<bool> seen(p - 1, false);
    for (std::uint32_t x = 1; x < p; ++x) {
        const std::uint32_t e = table[x];
        if (e >= p - 1 || seen[e]) return false;
        seen[e] = true;
        if (pow_mod(field.alpha(), e, p) != x) return false;
    }
    return true;
}

cplx root_of_unity(std::uint64_t num, std::uint64_t den) {
    const double angle = kTwoPi * static_cast<double>(num % den) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

MultiplicativeCharacter::MultiplicativeCharacter(FieldPtr field, std::uint32_t k)
    : field_(std::move(field)), k_(k) {
    if (!field_) throw std::invalid_argument("character needs a field");
    if (k_ >= field_->order()) throw std::invalid_argument("character exponent must lie in 0..p-2");
}

MultiplicativeCharacter MultiplicativeCharacter::quadratic(FieldPtr field) {
    const std::uint32_t half = field->order() / 2;
    return {std::move(field), half};
}

MultiplicativeCharacter MultiplicativeCharacter::quartic(FieldPtr field) {
    if (field->p() % 4 != 1) throw std::domain_error("quartic characters need p = 1 (mod 4)");
    const std::uint32_t quarter = field->order() / 4;
    return {std::move(field), quarter};
}

std::uint32_t MultiplicativeCharacter::order() const noexcept {
    const std::uint32_t n = field_->order();
    return n / std::gcd(n, k_);
}

MultiplicativeCharacter MultiplicativeCharacter::conj() const {
    const std::uint32_t n = field_->order();
    return {field_, (n - k_) % n};
}

std::uint32_t MultiplicativeCharacter::phase_index(std::uint32_t a) const {
    const std::uint64_t n = field_->order();
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(k_) * field_->dlog(a) % n);
}

cplx MultiplicativeCharacter::operator()(std::uint32_t a) const {
    if (a >= field_->p()) throw std::invalid_argument("character argument out of range");
    if (a == 0) return {0.0, 0.0};
    return root_of_unity(phase_index(a), field_->order());
}

AdditiveCharacter::AdditiveCharacter(FieldPtr field, std::uint32_t a) : field_(std::move(field)), a_(a) {
    if (!field_) throw std::invalid_argument("character needs a field");
    if (a_ >= field_->p()) throw std::invalid_argument("additive character scale out of range");
}

cplx AdditiveCharacter::operator()(std::int64_t x) const {
    const std::uint32_t p = field_->p();
    return root_of_unity(static_cast<std::uint64_t>(a_) * reduce_mod(x, p), p);
}

cplx gauss_sum_direct(std::uint32_t a, const MultiplicativeCharacter& chi) {
    const FieldPtr& field = chi.field();
    const AdditiveCharacter eps(field, a);
    cplx sum{0.0, 0.0};
    for (std::uint32_t x = 1; x < field->p(); ++x) sum += eps(x) * chi(x);
    return sum;
}

cplx gauss_sum(const MultiplicativeCharacter& chi) { return gauss_sum_direct(1, chi); }

cplx gauss_sum_general(std::uint32_t a, const MultiplicativeCharacter& chi) {
    const std::uint32_t p = chi.field()->p();
    if (a >= p) throw std::invalid_argument("Gauss sum scale out of range");
    if (a == 0 && chi.is_trivial()) return {static_cast<double>(p - 1), 0.0};
    return chi.conj()(a) * gauss_sum(chi);
}

TwoSquares two_squares(std::uint32_t p) {
    if (!is_prime(p) || p % 4 != 1) {
        throw std::domain_error("two-squares decomposition needs a prime p = 1 (mod 4), got " +
                                std::to_string(p));
    }
    for (std::uint64_t b = 2; b * b < p; b += 2) {
        const std::uint64_t rem = p - b * b;
        auto a = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rem)));
        while (a * a > rem) --a;
        while ((a + 1) * (a + 1) <= rem) ++a;
        if (a * a == rem && a % 2 == 1) {
            return {p, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                    std::atan2(static_cast<double>(b), static_cast<double>(a))};
        }
    }
    throw std::logic_error("no two-squares decomposition found");
}

double cos_two_gamma(std::uint32_t p) {
    const TwoSquares ts = two_squares(p);
    const auto a2 = static_cast<std::int64_t>(ts.a) * ts.a;
    const auto b2 = static_cast<std::int64_t>(ts.b) * ts.b;
    return static_cast<double>(a2 - b2) / static_cast<double>(p);
}

double cos_two_gamma_from_gauss_sum(const FieldPtr& field) {
    const cplx tau = gauss_sum(MultiplicativeCharacter::quartic(field));
    const double p = field->p();
    const cplx t2 = tau * tau;
    return (t2 * t2 / (p * p)).real();
}

} // namespace charseq
