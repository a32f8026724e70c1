#include "charseq/params.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace charseq {

namespace {

void require_same_field(const CharCombination& fc, const CharCombination& gc) {
    if (fc.field()->p() != gc.field()->p()) throw std::invalid_argument("combinations live over different fields");
}

class GaussCache {
public:
    explicit GaussCache(FieldPtr field) : field_(std::move(field)) {}

    cplx operator()(std::uint32_t k) {
        auto it = cache_.find(k);
        if (it == cache_.end()) it = cache_.emplace(k, gauss_sum(MultiplicativeCharacter(field_, k))).first;
        return it->second;
    }

private:
    FieldPtr field_;
    std::map<std::uint32_t, cplx> cache_;
};

std::uint32_t conj_exp(std::uint32_t k, std::uint32_t n) { return (n - k) % n; }

double w_sum(const CharCombination& c) {
    double w = 0.0;
    for (const auto& [k, coeff] : c.coeffs()) w += std::abs(coeff);
    return w;
}

// chi(-1) for chi = omega^k.
double sign_at_minus_one(std::uint32_t k) { return k % 2 == 0 ? 1.0 : -1.0; }

} // namespace

double QuadrupleSumResiduals::max() const noexcept { return std::max({full, diagonal, swapped, conjugate}); }

cplx quadruple_sum(const CharCombination& fc, const CharCombination& gc, const QuadFilter& keep) {
    require_same_field(fc, gc);
    const std::uint32_t n = fc.field()->order();
    const double p = fc.field()->p();
    GaussCache tau(fc.field());
    cplx total{};
    for (const auto& [phi, f_phi] : fc.coeffs()) {
        for (const auto& [chi, g_chi] : gc.coeffs()) {
            for (const auto& [psi, f_psi] : fc.coeffs()) {
                const std::uint32_t omega = static_cast<std::uint32_t>((std::uint64_t{phi} + chi + n - psi) % n);
                const cplx g_omega = gc.coefficient(omega);
                if (g_omega == cplx{} || !keep(phi, chi, psi, omega)) continue;
                total += f_phi * g_chi * std::conj(f_psi * g_omega) * tau(phi) * tau(chi) *
                         std::conj(tau(psi) * tau(omega)) / (p * p);
            }
        }
    }
    return total;
}

PairParameters parameters_from_combinations(const CharCombination& fc, const CharCombination& gc) {
    require_same_field(fc, gc);
    const std::uint32_t n = fc.field()->order();

    cplx s = quadruple_sum(fc, gc, [n](std::uint32_t phi, std::uint32_t chi, std::uint32_t psi, std::uint32_t omega) {
        return phi != conj_exp(chi, n) && phi != psi && phi != omega;
    });

    cplx u_sum{};
    cplx v_sum{};
    for (const auto& [phi, f_phi] : fc.coeffs()) {
        const cplx g_phi = gc.coefficient(phi);
        const cplx g_conj = gc.coefficient(conj_exp(phi, n));
        const cplx f_conj = fc.coefficient(conj_exp(phi, n));
        s -= std::norm(f_phi * g_phi);
        s -= std::norm(f_phi * g_conj);
        s -= f_phi * std::conj(f_conj) * g_conj * std::conj(g_phi);
        u_sum += f_phi * std::conj(g_phi);
        v_sum += f_phi * g_conj * sign_at_minus_one(phi);
    }
    const std::uint32_t eta = n / 2;
    s += std::norm(fc.coefficient(eta) * gc.coefficient(eta));

    if (std::abs(s.imag()) >= 1e-8) {
        throw std::runtime_error("S has a nonvanishing imaginary part: " + std::to_string(s.imag()));
    }
    return {s.real(), std::norm(u_sum), std::norm(v_sum), w_sum(fc), w_sum(gc)};
}

std::pair<double, double> closed_form_uv(std::uint32_t m, const std::vector<std::uint32_t>& classes_a,
                                         const std::vector<std::uint32_t>& classes_b, std::uint32_t p) {
    if (m == 0 || (p - 1) % (2 * m) != 0) {
        throw std::domain_error("p = " + std::to_string(p) + " is not 1 mod 2m");
    }
    const std::uint32_t two_m = 2 * m;
    const std::uint32_t minus_one = ((p - 1) / 2) % two_m;
    auto overlap = [&](std::uint32_t offset) {
        std::size_t count = 0;
        for (auto a : classes_a) {
            for (auto b : classes_b) {
                if (a % two_m == (b + offset) % two_m) ++count;
            }
        }
        return static_cast<double>(count);
    };
    const double dm = m;
    const double u = std::pow(2.0 / dm * overlap(0) - 1.0, 2);
    const double v = std::pow(2.0 / dm * overlap(minus_one) - 1.0, 2);
    return {u, v};
}

PairParameters family_table(std::uint32_t p, Family left, Family right) {
    const bool quartic = left != Family::H || right != Family::H;
    if (quartic && (!is_prime(p) || p % 4 != 1)) {
        throw std::domain_error("quartic families need a prime p = 1 (mod 4)");
    }
    if (!quartic && (p < 3 || !is_prime(p))) throw std::domain_error("Legendre family needs an odd prime");

    const double sqrt2 = std::sqrt(2.0);
    auto w = [&](Family fam) { return fam == Family::H ? 1.0 : sqrt2; };
    PairParameters out{0.0, 0.0, 0.0, w(left), w(right)};

    if (left == Family::H && right == Family::H) {
        out.s = -2.0;
        out.u = out.v = 1.0;
    } else if (left == Family::H || right == Family::H) {
        // f or g against h: all zero.
    } else {
        const double c = cos_two_gamma(p);
        if (left == right) {
            out.s = (-3.0 - c) / 2.0;
            out.u = out.v = 1.0;
        } else {
            out.s = (-1.0 + c) / 2.0;
        }
    }
    return out;
}

QuadrupleSumResiduals quadruple_sum_identities(const CharCombination& fc, const CharCombination& gc) {
    const PairParameters prm = parameters_from_combinations(fc, gc);
    const std::uint32_t n = fc.field()->order();
    const auto any = [](std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t) { return true; };

    QuadrupleSumResiduals d;
    d.full = std::abs(quadruple_sum(fc, gc, any) - cplx{prm.s + 1.0 + prm.u + prm.v});
    d.diagonal = std::abs(quadruple_sum(fc, gc, [](auto phi, auto chi, auto psi, auto omega) {
                              return phi == psi && chi == omega;
                          }) -
                          cplx{1.0});
    d.swapped = std::abs(quadruple_sum(fc, gc, [](auto phi, auto chi, auto psi, auto omega) {
                             return phi == omega && chi == psi;
                         }) -
                         cplx{prm.u});
    d.conjugate = std::abs(quadruple_sum(fc, gc, [n](auto phi, auto chi, auto psi, auto omega) {
                               return phi == conj_exp(chi, n) && psi == conj_exp(omega, n);
                           }) -
                           cplx{prm.v});
    return d;
}

} // namespace charseq
