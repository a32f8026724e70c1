#pragma once

// S, U, V, W parameters of a pair of character combination sequences.

#include "charseq/seqgen.hpp"

#include <functional>
#include <utility>

namespace charseq {

struct PairParameters {
    double s = 0.0;
    double u = 0.0;
    double v = 0.0;
    double w_f = 0.0;
    double w_g = 0.0;
};

/// Quadruple Gauss-sum sum for S plus the U, V, W sums, over the sparse
/// supports.  Throws std::invalid_argument if the fields differ and
/// std::runtime_error if S has an imaginary residue of 1e-8 or more.
PairParameters parameters_from_combinations(const CharCombination& fc, const CharCombination& gc);

/// U and V from class overlaps, with -B = B shifted by dlog(-1) mod 2m.
/// Throws std::domain_error unless p = 1 (mod 2m).
std::pair<double, double> closed_form_uv(std::uint32_t m, const std::vector<std::uint32_t>& classes_a,
                                         const std::vector<std::uint32_t>& classes_b, std::uint32_t p);

/// Tabulated parameters for the f, g, h families, using cos 2gamma = (a^2-b^2)/p.
PairParameters family_table(std::uint32_t p, Family left, Family right);

/// Absolute residuals of the four restricted quadruple sums against
/// S+1+U+V, 1, U and V respectively.
struct QuadrupleSumResiduals {
    double full = 0.0;
    double diagonal = 0.0;
    double swapped = 0.0;
    double conjugate = 0.0;

    double max() const noexcept;
};

QuadrupleSumResiduals quadruple_sum_identities(const CharCombination& fc, const CharCombination& gc);

/// Sum of f_phi g_chi conj(f_psi g_omega) tau(phi)tau(chi)conj(tau(psi)tau(omega))/p^2
/// over phi chi = psi omega, further filtered by `keep(phi, chi, psi, omega)`
/// on character exponents.
using QuadFilter = std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t)>;
cplx quadruple_sum(const CharCombination& fc, const CharCombination& gc, const QuadFilter& keep);

} // namespace charseq
