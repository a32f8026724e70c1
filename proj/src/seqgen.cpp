#include "charseq/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace charseq {

CharCombination::CharCombination(FieldPtr field, std::map<std::uint32_t, cplx> coeffs)
    : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("combination needs a field");
    double norm = 0.0;
    for (const auto& [k, c] : coeffs) {
        if (k >= field_->order()) throw std::invalid_argument("character exponent out of range");
        if (c == cplx{0.0, 0.0}) continue;
        if (k == 0) throw std::invalid_argument("trivial character must have zero coefficient");
        norm += std::norm(c);
        coeffs_.emplace(k, c);
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("combination is not normalized (sum |f|^2 = " + std::to_string(norm) + ")");
    }
}

cplx CharCombination::coefficient(std::uint32_t k) const {
    const auto it = coeffs_.find(k);
    return it == coeffs_.end() ? cplx{0.0, 0.0} : it->second;
}

cplx CharCombination::operator()(std::int64_t j) const {
    const std::uint32_t a = reduce_mod(j, field_->p());
    if (a == 0) return {0.0, 0.0};
    const std::uint64_t n = field_->order();
    const std::uint64_t log = field_->dlog(a);
    cplx sum{0.0, 0.0};
    for (const auto& [k, c] : coeffs_) sum += c * root_of_unity(k * log % n, n);
    return sum;
}

ResidueClassSpec::ResidueClassSpec(FieldPtr field, std::uint32_t m, std::vector<std::uint32_t> classes)
    : field_(std::move(field)), m_(m), classes_(std::move(classes)) {
    if (!field_) throw std::invalid_argument("residue class spec needs a field");
    if (m_ == 0 || m_ > 32) throw std::domain_error("m must lie in 1..32");
    if ((field_->p() - 1) % (2 * m_) != 0) {
        throw std::domain_error("p = " + std::to_string(field_->p()) + " is not 1 mod " + std::to_string(2 * m_));
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    if (classes_.size() != m_) throw std::domain_error("exactly m distinct classes are required");
    for (auto c : classes_) {
        if (c >= 2 * m_) throw std::domain_error("class index must lie in 0..2m-1");
        mask_ |= std::uint64_t{1} << c;
    }
}

std::int8_t ResidueClassSpec::value(std::int64_t j) const {
    const std::uint32_t a = reduce_mod(j, field_->p());
    if (a == 0) return 0;
    return selected(coset_of(a)) ? 1 : -1;
}

char family_letter(Family family) {
    switch (family) {
    case Family::F: return 'f';
    case Family::G: return 'g';
    case Family::H: return 'h';
    }
    return '?';
}

Family parse_family(char letter) {
    switch (letter) {
    case 'f': return Family::F;
    case 'g': return Family::G;
    case 'h': return Family::H;
    default: throw std::invalid_argument(std::string("unknown sequence family '") + letter + "'");
    }
}

ResidueClassSpec family_spec(const FieldPtr& field, Family family) {
    switch (family) {
    case Family::F: return {field, 2, {0, 1}};
    case Family::G: return {field, 2, {0, 3}};
    case Family::H: return {field, 1, {0}};
    }
    throw std::invalid_argument("unknown family");
}

Sequence residue_class_sequence(const ResidueClassSpec& spec, std::int64_t shift, std::size_t length) {
    if (length == 0) throw std::invalid_argument("sequence length must be positive");
    const std::uint32_t p = spec.p();

    // One period of F, then read the window cyclically.
    std::vector<std::int8_t> period(p);
    for (std::uint32_t a = 0; a < p; ++a) period[a] = spec.value(a);

    Sequence seq;
    seq.p = p;
    seq.shift = shift;
    seq.terms.resize(length);
    std::uint32_t idx = reduce_mod(shift, p);
    for (std::size_t j = 0; j < length; ++j) {
        seq.terms[j] = period[idx];
        if (++idx == p) idx = 0;
    }
    return seq;
}

Sequence quartic_f(const FieldPtr& field, std::int64_t shift, std::size_t length) {
    return residue_class_sequence(family_spec(field, Family::F), shift, length);
}
Sequence quartic_g(const FieldPtr& field, std::int64_t shift, std::size_t length) {
    return residue_class_sequence(family_spec(field, Family::G), shift, length);
}
Sequence legendre_h(const FieldPtr& field, std::int64_t shift, std::size_t length) {
    return residue_class_sequence(family_spec(field, Family::H), shift, length);
}
Sequence quartic_f(std::uint32_t p, std::int64_t shift, std::size_t length) {
    return quartic_f(PrimeField::make(p), shift, length);
}
Sequence quartic_g(std::uint32_t p, std::int64_t shift, std::size_t length) {
    return quartic_g(PrimeField::make(p), shift, length);
}
Sequence legendre_h(std::uint32_t p, std::int64_t shift, std::size_t length) {
    return legendre_h(PrimeField::make(p), shift, length);
}

Sequence family_sequence(const FieldPtr& field, Family family, std::int64_t shift, std::size_t length) {
    return residue_class_sequence(family_spec(field, family), shift, length);
}

ComplexSequence combination_sequence(const CharCombination& comb, std::int64_t shift, std::size_t length) {
    if (length == 0) throw std::invalid_argument("sequence length must be positive");
    ComplexSequence seq;
    seq.p = comb.field()->p();
    seq.shift = shift;
    seq.terms.reserve(length);
    for (std::size_t j = 0; j < length; ++j) seq.terms.push_back(comb(shift + static_cast<std::int64_t>(j)));
    return seq;
}

Sequence unimodularize(Sequence seq) {
    for (auto& t : seq.terms) {
        if (t == 0) t = 1;
    }
    seq.unimodularized = true;
    return seq;
}

ComplexSequence unimodularize(ComplexSequence seq) {
    for (auto& t : seq.terms) {
        if (t == cplx{0.0, 0.0}) t = 1.0;
    }
    seq.unimodularized = true;
    return seq;
}

CharCombination combination_coefficients(const ResidueClassSpec& spec) {
    const std::uint32_t m = spec.m();
    const std::uint32_t two_m = 2 * m;
    const std::uint32_t step = spec.field()->order() / two_m;
    std::map<std::uint32_t, cplx> coeffs;
    // theta_j = omega^{j (p-1)/2m}, theta_j(alpha^c) = exp(pi i j c / m).
    for (std::uint32_t j = 1; j < two_m; ++j) {
        cplx sum{0.0, 0.0};
        for (auto c : spec.classes()) sum += root_of_unity(static_cast<std::uint64_t>(two_m - (j * c) % two_m), two_m);
        sum /= static_cast<double>(m);
        if (std::abs(sum) < 1e-12) continue;
        // Snap tiny components so exact coefficients like (1-i)/2 stay exact.
        if (std::abs(sum.real()) < 1e-15) sum.real(0.0);
        if (std::abs(sum.imag()) < 1e-15) sum.imag(0.0);
        coeffs.emplace(j * step, sum);
    }
    return {spec.field(), std::move(coeffs)};
}

ShiftLength natural_params(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("natural parameters need an odd prime");
    return {static_cast<std::int64_t>((p - 1) / 4), p};
}

ShiftLength appended_params(std::uint32_t p, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    const double pd = p;
    const auto shift = static_cast<std::int64_t>(std::round(pd * (3.0 - 2.0 * lambda) / 4.0));
    const auto length = static_cast<std::int64_t>(std::round(pd * lambda));
    if (length < 1) throw std::invalid_argument("appended length rounds to zero");
    return {shift, static_cast<std::size_t>(length)};
}

} // namespace charseq
