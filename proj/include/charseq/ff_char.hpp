#pragma once

// Prime fields, multiplicative and additive characters, Gauss sums, and the
// two-squares decomposition of primes p = 1 (mod 4).

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace charseq {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_prime(std::uint64_t n);

/// Smallest positive residue of multiplicative order p-1 modulo p.
/// Throws std::invalid_argument unless p is an odd prime.
std::uint32_t find_primitive_root(std::uint32_t p);

/// x mod n in [0, n) for signed x.
inline std::uint32_t reduce_mod(std::int64_t x, std::uint32_t n) {
    const std::int64_t r = x % static_cast<std::int64_t>(n);
    return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

class PrimeField;
using FieldPtr = std::shared_ptr<const PrimeField>;

/// F_p with its smallest primitive root alpha and the discrete-log table.
/// Immutable after construction.
class PrimeField {
public:
    static FieldPtr make(std::uint32_t p);

    /// Builds a field around a caller-supplied log table without validating it.
    /// Only for exercising check_dlog_bijection on corrupted tables.
    static FieldPtr from_table(std::uint32_t p, std::uint32_t alpha, std::vector<std::uint32_t> dlog);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t alpha() const noexcept { return alpha_; }
    std::uint32_t order() const noexcept { return p_ - 1; }

    /// Discrete log of a in 1..p-1, base alpha.
    std::uint32_t dlog(std::uint32_t a) const;

    /// alpha^e mod p.
    std::uint32_t power(std::uint64_t e) const { return table_pow_[e % (p_ - 1)]; }

    const std::vector<std::uint32_t>& dlog_table() const noexcept { return dlog_; }

private:
    PrimeField(std::uint32_t p, std::uint32_t alpha, std::vector<std::uint32_t> dlog,
               std::vector<std::uint32_t> pow);

    std::uint32_t p_;
    std::uint32_t alpha_;
    std::vector<std::uint32_t> dlog_;      // index 0 unused
    std::vector<std::uint32_t> table_pow_; // alpha^e for e in 0..p-2
};

/// Verifies alpha^dlog[x] = x for every x and that dlog is a bijection onto 0..p-2.
bool check_dlog_bijection(const PrimeField& field);

/// The character omega^k, where omega(alpha) = exp(2 pi i / (p-1)).
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter(FieldPtr field, std::uint32_t k);

    static MultiplicativeCharacter trivial(FieldPtr field) { return {std::move(field), 0}; }
    static MultiplicativeCharacter quadratic(FieldPtr field);
    /// theta with theta(alpha) = i; requires p = 1 (mod 4).
    static MultiplicativeCharacter quartic(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t exponent() const noexcept { return k_; }
    std::uint32_t order() const noexcept;
    bool is_trivial() const noexcept { return k_ == 0; }

    MultiplicativeCharacter conj() const;

    /// Returns k*dlog(a) mod (p-1), the exponent of the root of unity chi(a); a != 0.
    std::uint32_t phase_index(std::uint32_t a) const;

    /// chi(a) with chi(0) = 0.  Throws std::invalid_argument if a >= p.
    cplx operator()(std::uint32_t a) const;

    /// chi(-1) = (-1)^k, exactly.
    int at_minus_one() const noexcept { return (k_ % 2 == 0) ? 1 : -1; }

private:
    FieldPtr field_;
    std::uint32_t k_;
};

/// epsilon_a(x) = exp(2 pi i a x / p).
class AdditiveCharacter {
public:
    AdditiveCharacter(FieldPtr field, std::uint32_t a);

    std::uint32_t scale() const noexcept { return a_; }
    cplx operator()(std::int64_t x) const;

private:
    FieldPtr field_;
    std::uint32_t a_;
};

/// exp(2 pi i num / den) with num reduced first.
cplx root_of_unity(std::uint64_t num, std::uint64_t den);

/// tau(chi) = sum_{x != 0} epsilon(x) chi(x), by direct summation.
cplx gauss_sum(const MultiplicativeCharacter& chi);

/// tau_a(chi) by direct summation with epsilon_a.
cplx gauss_sum_direct(std::uint32_t a, const MultiplicativeCharacter& chi);

/// tau_a(chi) reduced to tau(chi): p-1 if a = 0 and chi trivial, else conj(chi)(a) tau(chi).
cplx gauss_sum_general(std::uint32_t a, const MultiplicativeCharacter& chi);

struct TwoSquares {
    std::uint32_t p;
    std::uint32_t a; // odd
    std::uint32_t b; // even
    double gamma;    // atan2(b, a), in (0, pi/2)
};

/// Unique p = a^2 + b^2 with a odd, b even, by scanning even b.
/// Throws std::domain_error unless p is a prime with p = 1 (mod 4).
TwoSquares two_squares(std::uint32_t p);

/// (a^2 - b^2) / p, which equals cos(2 gamma_p) and Re(tau(theta)^4 / p^2).
double cos_two_gamma(std::uint32_t p);

/// Re(tau(theta)^4 / p^2) from floating Gauss sums; cross-check for cos_two_gamma.
double cos_two_gamma_from_gauss_sum(const FieldPtr& field);

} // namespace charseq
