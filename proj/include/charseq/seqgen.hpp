#pragma once

// Character combination sequences: 2m-th residue class sequences, the quartic
// f/g and Legendre h families, and their unimodularizations.

#include "charseq/ff_char.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace charseq {

/// Sparse combination sum_k coeff[k] * omega^k.  The trivial character is
/// never present and the squared coefficient magnitudes sum to one.
class CharCombination {
public:
    /// Throws std::invalid_argument on a trivial-character coefficient or a
    /// normalization error above 1e-9.
    CharCombination(FieldPtr field, std::map<std::uint32_t, cplx> coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    const std::map<std::uint32_t, cplx>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of omega^k (zero when absent).
    cplx coefficient(std::uint32_t k) const;

    /// F(j mod p) = sum f_chi chi(j mod p).
    cplx operator()(std::int64_t j) const;

private:
    FieldPtr field_;
    std::map<std::uint32_t, cplx> coeffs_;
};

/// The m cosets alpha^j F_p^{*2m} that map to +1.
class ResidueClassSpec {
public:
    /// Throws std::domain_error if p != 1 (mod 2m), |classes| != m, or an index is
    /// outside 0..2m-1.
    ResidueClassSpec(FieldPtr field, std::uint32_t m, std::vector<std::uint32_t> classes);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_->p(); }
    std::uint32_t m() const noexcept { return m_; }
    const std::vector<std::uint32_t>& classes() const noexcept { return classes_; }

    /// Coset index dlog(x) mod 2m for x != 0.
    std::uint32_t coset_of(std::uint32_t x) const { return field_->dlog(x) % (2 * m_); }
    bool selected(std::uint32_t coset) const { return (mask_ >> coset) & 1u; }

    /// F_{p,A}(j mod p) in {-1, 0, +1}.
    std::int8_t value(std::int64_t j) const;

private:
    FieldPtr field_;
    std::uint32_t m_;
    std::vector<std::uint32_t> classes_;
    std::uint64_t mask_ = 0;
};

/// A finite window (F(s), ..., F(s+l-1)) of a {-1,0,+1}-valued generator.
struct Sequence {
    std::uint32_t p = 0;
    std::int64_t shift = 0;
    std::vector<std::int8_t> terms;
    bool unimodularized = false;

    std::size_t length() const noexcept { return terms.size(); }
};

/// Same window for a general complex character combination.
struct ComplexSequence {
    std::uint32_t p = 0;
    std::int64_t shift = 0;
    std::vector<cplx> terms;
    bool unimodularized = false;

    std::size_t length() const noexcept { return terms.size(); }
};

enum class Family { F, G, H };

char family_letter(Family family);
/// 'f', 'g' or 'h'; throws std::invalid_argument otherwise.
Family parse_family(char letter);

/// Classes {0,1} (m=2) for f, {0,3} (m=2) for g, {0} (m=1) for h.
ResidueClassSpec family_spec(const FieldPtr& field, Family family);

Sequence residue_class_sequence(const ResidueClassSpec& spec, std::int64_t shift, std::size_t length);

Sequence quartic_f(const FieldPtr& field, std::int64_t shift, std::size_t length);
Sequence quartic_g(const FieldPtr& field, std::int64_t shift, std::size_t length);
Sequence legendre_h(const FieldPtr& field, std::int64_t shift, std::size_t length);
Sequence quartic_f(std::uint32_t p, std::int64_t shift, std::size_t length);
Sequence quartic_g(std::uint32_t p, std::int64_t shift, std::size_t length);
Sequence legendre_h(std::uint32_t p, std::int64_t shift, std::size_t length);

Sequence family_sequence(const FieldPtr& field, Family family, std::int64_t shift, std::size_t length);

ComplexSequence combination_sequence(const CharCombination& comb, std::int64_t shift, std::size_t length);

/// Replaces every zero term with +1.
Sequence unimodularize(Sequence seq);
ComplexSequence unimodularize(ComplexSequence seq);

/// f_chi = (1/m) sum_{A} conj(chi)(A) over the nontrivial characters of the
/// order-2m subgroup; zero elsewhere.
CharCombination combination_coefficients(const ResidueClassSpec& spec);

struct ShiftLength {
    std::int64_t shift;
    std::size_t length;
};

/// ((p-1)/4, p), with integer division for p = 3 (mod 4).
ShiftLength natural_params(std::uint32_t p);

/// (round(p(3-2 lambda)/4), round(p lambda)), rounding half away from zero.
ShiftLength appended_params(std::uint32_t p, double lambda);

} // namespace charseq
