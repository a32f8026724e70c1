#include "charseq/verify.hpp"

#include "charseq/asymptotics.hpp"
#include "charseq/correlate.hpp"
#include "charseq/experiments.hpp"
#include "charseq/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>

namespace charseq {

namespace {

// Running worst-case residual for one named check.
class Check {
public:
    Check(std::string name, double tolerance) : name_(std::move(name)), tol_(tolerance) {}

    void residual(double r) {
        if (!(r <= worst_)) worst_ = std::isnan(r) ? INFINITY : r;
    }
    void require(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) failure_ = what;
    }

    CheckResult result() const {
        CheckResult r{name_, worst_ <= tol_ && failure_.empty(), worst_, tol_, failure_};
        return r;
    }

private:
    std::string name_;
    double tol_;
    double worst_ = 0.0;
    std::string failure_;
};

std::string at_p(std::uint32_t p) { return "p=" + std::to_string(p); }

std::vector<std::uint32_t> odd_primes(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = std::max(3u, lo); p <= hi; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::vector<std::uint32_t> primes_mod(std::uint32_t modulus, std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (auto p : odd_primes(lo, hi)) {
        if (p % modulus == 1) out.push_back(p);
    }
    return out;
}

// All size-m subsets of {0..2m-1}.
std::vector<std::vector<std::uint32_t>> class_choices(std::uint32_t m) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::uint32_t n = 2 * m;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != m) continue;
        std::vector<std::uint32_t> cls;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (mask >> j & 1u) cls.push_back(j);
        }
        out.push_back(std::move(cls));
    }
    return out;
}

constexpr std::array<Family, 3> kFamilies{Family::F, Family::G, Family::H};

} // namespace

std::vector<CheckResult> ff_char_checks() {
    std::vector<CheckResult> out;

    {
        Check c("dlog_bijection", 0.0);
        for (auto p : odd_primes(3, 2000)) {
            const FieldPtr f = PrimeField::make(p);
            c.require(check_dlog_bijection(*f), at_p(p));
            for (std::uint32_t g = 2; g < f->alpha(); ++g) {
                std::uint64_t x = g;
                std::uint32_t order = 1;
                while (x != 1) {
                    x = x * g % p;
                    ++order;
                }
                c.require(order != p - 1, "smaller primitive root at " + at_p(p));
            }
        }
        out.push_back(c.result());
    }
    {
        Check c("character_homomorphism", 1e-9);
        for (auto p : odd_primes(3, 31)) {
            const FieldPtr f = PrimeField::make(p);
            for (std::uint32_t k = 0; k < f->order(); ++k) {
                const MultiplicativeCharacter chi(f, k);
                c.require(chi(0) == cplx{}, "nonzero value at 0, " + at_p(p));
                for (std::uint32_t a = 1; a < p; ++a) {
                    c.residual(std::abs(std::abs(chi(a)) - 1.0));
                    for (std::uint32_t b = 1; b < p; ++b) {
                        c.residual(std::abs(chi(static_cast<std::uint32_t>(std::uint64_t{a} * b % p)) - chi(a) * chi(b)));
                    }
                }
            }
        }
        out.push_back(c.result());
    }
    {
        Check add("additive_orthogonality", 1e-9);
        Check mul("multiplicative_orthogonality", 1e-9);
        for (auto p : odd_primes(3, 100)) {
            const FieldPtr f = PrimeField::make(p);
            for (std::uint32_t a = 0; a < p; ++a) {
                const AdditiveCharacter eps(f, a);
                cplx sum{};
                for (std::uint32_t b = 0; b < p; ++b) sum += eps(b);
                add.residual(std::abs(sum - cplx{a == 0 ? static_cast<double>(p) : 0.0}));
            }
            for (std::uint32_t k = 0; k < f->order(); ++k) {
                const MultiplicativeCharacter chi(f, k);
                cplx sum{};
                for (std::uint32_t b = 1; b < p; ++b) sum += chi(b);
                mul.residual(std::abs(sum - cplx{k == 0 ? static_cast<double>(p - 1) : 0.0}));
            }
        }
        out.push_back(add.result());
        out.push_back(mul.result());
    }
    {
        Check mag("gauss_magnitude", 1e-6);
        Check conj("gauss_conjugation", 1e-6);
        for (auto p : odd_primes(3, 200)) {
            const FieldPtr f = PrimeField::make(p);
            for (std::uint32_t k = 0; k < f->order(); ++k) {
                const MultiplicativeCharacter chi(f, k);
                const cplx tau = gauss_sum(chi);
                const double expect = chi.is_trivial() ? 1.0 : static_cast<double>(p);
                mag.residual(std::abs(std::norm(tau) - expect) / expect);
                conj.residual(std::abs(std::conj(tau) - static_cast<double>(chi.at_minus_one()) * gauss_sum(chi.conj())));
            }
        }
        out.push_back(mag.result());
        out.push_back(conj.result());
    }
    {
        Check general("gauss_general_reduction", 1e-8);
        Check fourier("character_fourier_expansion", 1e-8);
        for (auto p : odd_primes(3, 100)) {
            const FieldPtr f = PrimeField::make(p);
            for (std::uint32_t k = 0; k < f->order(); ++k) {
                const MultiplicativeCharacter chi(f, k);
                std::vector<cplx> tau_b(p);
                for (std::uint32_t b = 0; b < p; ++b) {
                    tau_b[b] = gauss_sum_direct(b, chi);
                    if (b == 0 && chi.is_trivial()) tau_b[b] = static_cast<double>(p - 1);
                    general.residual(std::abs(gauss_sum_general(b, chi) - tau_b[b]));
                }
                for (std::uint32_t a = 0; a < p; ++a) {
                    cplx sum{};
                    for (std::uint32_t b = 0; b < p; ++b) sum += tau_b[b] * std::conj(AdditiveCharacter(f, b)(a));
                    fourier.residual(std::abs(sum / static_cast<double>(p) - chi(a)));
                }
            }
        }
        out.push_back(general.result());
        out.push_back(fourier.result());
    }
    {
        Check c("coset_indicator", 1e-9);
        for (std::uint32_t m = 1; m <= 3; ++m) {
            for (auto p : primes_mod(2 * m, 3, 200)) {
                const FieldPtr f = PrimeField::make(p);
                const std::uint32_t step = f->order() / (2 * m);
                for (std::uint32_t j = 0; j < 2 * m; ++j) {
                    const std::uint32_t x = f->power(j);
                    cplx sum{};
                    for (std::uint32_t t = 0; t < 2 * m; ++t) sum += MultiplicativeCharacter(f, t * step)(x);
                    c.residual(std::abs(sum / static_cast<double>(2 * m) - cplx{j == 0 ? 1.0 : 0.0}));
                }
            }
        }
        out.push_back(c.result());
    }
    {
        Check c("two_squares_unique", 1e-12);
        constexpr std::uint32_t kLimit = 1000000;
        std::vector<bool> composite(kLimit + 1, false);
        for (std::uint32_t i = 2; i * i <= kLimit; ++i) {
            if (!composite[i]) {
                for (std::uint32_t j = i * i; j <= kLimit; j += i) composite[j] = true;
            }
        }
        for (std::uint32_t p = 5; p <= kLimit; p += 4) {
            if (composite[p]) continue;
            int found = 0;
            for (std::uint64_t b = 2; b * b < p; b += 2) {
                const std::uint64_t rem = p - b * b;
                auto a = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rem)));
                while (a * a > rem) --a;
                while ((a + 1) * (a + 1) <= rem) ++a;
                if (a * a == rem && a % 2 == 1) ++found;
            }
            c.require(found == 1, "decomposition count at " + at_p(p));
            const TwoSquares ts = two_squares(p);
            const double root = std::sqrt(static_cast<double>(p));
            c.residual(std::abs(root * std::cos(ts.gamma) - ts.a) / ts.a);
            c.residual(std::abs(root * std::sin(ts.gamma) - ts.b) / ts.b);
        }
        out.push_back(c.result());
    }
    {
        Check c("cos2gamma_gauss_agreement", 1e-6);
        for (auto p : primes_mod(4, 5, 500)) c.residual(std::abs(cos_two_gamma(p) - cos_two_gamma_from_gauss_sum(PrimeField::make(p))));
        out.push_back(c.result());
    }
    return out;
}

std::vector<CheckResult> seqgen_checks() {
    std::vector<CheckResult> out;
    Check reconstruction("residue_class_reconstruction", 1e-9);
    Check norm("combination_normalization", 1e-9);
    Check conj("combination_conjugate_symmetry", 1e-12);
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (auto p : primes_mod(2 * m, 3, 200)) {
            const FieldPtr f = PrimeField::make(p);
            const std::uint32_t n = f->order();
            for (const auto& cls : class_choices(m)) {
                const ResidueClassSpec spec(f, m, cls);
                const CharCombination comb = combination_coefficients(spec);
                double total = 0.0;
                for (const auto& [k, coeff] : comb.coeffs()) {
                    total += std::norm(coeff);
                    conj.residual(std::abs(comb.coefficient((n - k) % n) - std::conj(coeff)));
                }
                norm.residual(std::abs(total - 1.0));
                for (std::uint32_t a = 0; a < p; ++a) reconstruction.residual(std::abs(comb(a) - cplx{static_cast<double>(spec.value(a))}));
            }
        }
    }
    out.push_back(reconstruction.result());
    out.push_back(norm.result());
    out.push_back(conj.result());

    Check zeros("zero_term_count", 0.0);
    Check balance("full_period_balance", 0.0);
    for (std::uint32_t p : {5u, 13u, 17u, 29u, 101u}) {
        const FieldPtr f = PrimeField::make(p);
        for (Family fam : kFamilies) {
            for (std::int64_t s : {std::int64_t{-7}, std::int64_t{0}, std::int64_t{3}, std::int64_t{p / 2}}) {
                for (std::size_t len = 1; len <= 3 * p + 2; ++len) {
                    const Sequence seq = family_sequence(f, fam, s, len);
                    const auto count = static_cast<std::size_t>(std::count(seq.terms.begin(), seq.terms.end(), 0));
                    zeros.require(count == len / p || count == (len + p - 1) / p, "zero count at " + at_p(p));
                }
                const Sequence period = family_sequence(f, fam, s, p);
                std::int64_t sum = 0;
                for (auto t : period.terms) sum += t;
                balance.require(sum == 0, "unbalanced period at " + at_p(p));
            }
        }
    }
    out.push_back(zeros.result());
    out.push_back(balance.result());
    return out;
}

namespace {

Sequence random_binary(std::mt19937_64& rng, std::size_t len) {
    Sequence s;
    s.terms.resize(len);
    for (auto& t : s.terms) t = (rng() & 1u) ? 1 : -1;
    s.unimodularized = true;
    return s;
}

// Unimodularized natural and appended family pairs for a handful of primes.
std::vector<std::pair<Sequence, Sequence>> family_pairs() {
    std::vector<std::pair<Sequence, Sequence>> out;
    const double lambda = optimum_constants().lambda_app;
    for (std::uint32_t p : {13u, 17u, 29u, 53u, 101u, 257u, 401u}) {
        const FieldPtr f = PrimeField::make(p);
        for (const ShiftLength& w : {natural_params(p), appended_params(p, lambda)}) {
            for (Family a : kFamilies) {
                for (Family b : kFamilies) {
                    out.emplace_back(unimodularize(family_sequence(f, a, w.shift, w.length)),
                                     unimodularize(family_sequence(f, b, w.shift, w.length)));
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<CheckResult> correlate_checks() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(20240611);

    Check symmetry("correlation_symmetry", 0.0);
    Check support("correlation_support", 0.0);
    Check ps("pursley_sarwate_bound", 1e-9);
    auto pair_checks = [&](const Sequence& f, const Sequence& g) {
        const IntProfile fg = cross_correlation(f, g);
        const IntProfile gf = cross_correlation(g, f);
        const auto len = static_cast<std::int64_t>(f.length());
        for (std::int64_t s = -len; s <= len; ++s) symmetry.require(fg.at(s) == gf.at(-s), "symmetry");
        support.require(fg.values.size() == static_cast<std::size_t>(2 * len - 1) && fg.at(len) == 0 && fg.at(-len) == 0,
                        "support");
        const MeritReport r = merit_report(f, g);
        const double root = std::sqrt(r.df_f * r.df_g);
        ps.residual(std::max({0.0, 1.0 - root - r.cdf, r.cdf - 1.0 - root, 1.0 - r.psc}));
    };
    for (int i = 0; i < 200; ++i) {
        const std::size_t len = 1 + rng() % 256;
        const Sequence f = random_binary(rng, len);
        const Sequence g = random_binary(rng, len);
        pair_checks(f, g);
    }
    for (const auto& [f, g] : family_pairs()) pair_checks(f, g);
    out.push_back(symmetry.result());
    out.push_back(support.result());
    out.push_back(ps.result());

    Check energy("zero_shift_energy", 0.0);
    for (std::uint32_t p : {13u, 29u, 101u}) {
        const FieldPtr f = PrimeField::make(p);
        for (std::size_t len : {std::size_t{1}, std::size_t{p - 1}, std::size_t{p}, std::size_t{p + 5}, std::size_t{3 * p}}) {
            const Sequence seq = quartic_f(f, 2, len);
            const auto zeros = static_cast<std::int64_t>(std::count(seq.terms.begin(), seq.terms.end(), 0));
            energy.require(cross_correlation(seq, seq).at(0) == static_cast<std::int64_t>(len) - zeros, "C(0) at " + at_p(p));
        }
    }
    out.push_back(energy.result());

    Check parseval_check("periodic_parseval", 1e-6);
    Check transform_check("transform_energy", 1e-6);
    Check roundtrip("dft_roundtrip", 1e-9);
    Check periodic("periodic_legendre_7", 1e-12);
    for (auto p : primes_mod(4, 5, 200)) {
        const FieldPtr f = PrimeField::make(p);
        for (Family a : kFamilies) {
            const ResidueClassSpec sa = family_spec(f, a);
            const auto per_a = periodic_version(sa);
            const std::vector<cplx> ua(per_a.begin(), per_a.end());
            const auto ha = dft(ua);
            transform_check.residual(std::abs(ha[0]));
            double energy_sum = 0.0;
            for (std::size_t i = 1; i < ha.size(); ++i) energy_sum += std::norm(ha[i]);
            transform_check.residual(std::abs(energy_sum - static_cast<double>(p) * (p - 1)) / (static_cast<double>(p) * (p - 1)));
            const auto back = inverse_dft(ha);
            for (std::size_t i = 0; i < back.size(); ++i) roundtrip.residual(std::abs(back[i] - ua[i]));
            for (Family b : kFamilies) {
                const auto per_b = periodic_version(family_spec(f, b));
                const std::vector<cplx> ub(per_b.begin(), per_b.end());
                const auto hb = dft(ub);
                double lhs = 0.0;
                for (auto v : periodic_cross_correlation(per_a, per_b)) lhs += static_cast<double>(v) * static_cast<double>(v);
                double rhs = 0.0;
                for (std::size_t i = 0; i < ha.size(); ++i) rhs += std::norm(ha[i] * hb[i]);
                rhs /= static_cast<double>(p);
                parseval_check.residual(std::abs(lhs - rhs) / lhs);
            }
        }
    }
    {
        const auto per = periodic_version(family_spec(PrimeField::make(7), Family::H));
        const auto pc = periodic_cross_correlation(per, per);
        periodic.require(pc[0] == 6, "PC(0)");
        for (std::size_t s = 1; s < 7; ++s) periodic.require(pc[s] == -1, "PC(s)");
        periodic.residual(std::abs(mean_square_periodic(per, per) - 1.0));
    }
    out.push_back(parseval_check.result());
    out.push_back(transform_check.result());
    out.push_back(roundtrip.result());
    out.push_back(periodic.result());
    return out;
}

std::vector<CheckResult> kernel_checks() {
    std::vector<CheckResult> out;
    Check exact("fast_kernel_equivalence", 0.0);
    Check parseval("fast_parseval_sum", 1e-9);
    const double lambda = optimum_constants().lambda_app;
    auto compare = [&](const Sequence& f, const Sequence& g) {
        const IntProfile direct = cross_correlation(f, g);
        const IntProfile fast = cross_correlation_fft(f, g);
        exact.require(direct.values == fast.values && direct.min_shift == fast.min_shift,
                      "mismatch at length " + std::to_string(f.length()));
        double total = 0.0;
        for (auto v : direct.values) total += static_cast<double>(v) * static_cast<double>(v);
        parseval.residual(std::abs(sum_squared_correlation_fft(f, g) - total) / std::max(total, 1.0));
    };

    const auto primes = primes_mod(4, 5, 4096);
    for (std::size_t i = 0; i < primes.size(); i += 8) {
        const std::uint32_t p = primes[i];
        const FieldPtr f = PrimeField::make(p);
        std::vector<ShiftLength> windows{natural_params(p)};
        const ShiftLength app = appended_params(p, lambda);
        if (app.length <= 4096) windows.push_back(app);
        for (const auto& w : windows) {
            const Sequence sf = family_sequence(f, Family::F, w.shift, w.length);
            const Sequence sg = family_sequence(f, Family::G, w.shift, w.length);
            const Sequence sh = family_sequence(f, Family::H, w.shift, w.length);
            compare(sf, sf);
            compare(sf, sg);
            compare(unimodularize(sf), unimodularize(sh));
            compare(unimodularize(sh), unimodularize(sh));
        }
    }
    {
        const FieldPtr f = PrimeField::make(4093);
        const Sequence sf = unimodularize(family_sequence(f, Family::F, 1023, 4096));
        const Sequence sg = unimodularize(family_sequence(f, Family::G, 1023, 4096));
        compare(sf, sg);
    }
    for (std::size_t len = 1; len <= 64; ++len) {
        const FieldPtr f = PrimeField::make(13);
        compare(family_sequence(f, Family::F, 0, len), family_sequence(f, Family::H, 5, len));
    }
    out.push_back(exact.result());
    out.push_back(parseval.result());
    return out;
}

std::vector<CheckResult> params_checks() {
    std::vector<CheckResult> out;
    Check mean_sq("mean_square_identity", 1e-6);
    Check quad("quadruple_sum_identities", 1e-8);
    Check table_check("family_table_agreement", 1e-6);
    Check floor("autocorrelation_mean_square_floor", 1e-9);
    Check range("uv_range", 1e-12);
    for (auto p : primes_mod(4, 5, 500)) {
        const FieldPtr f = PrimeField::make(p);
        for (Family a : kFamilies) {
            const ResidueClassSpec sa = family_spec(f, a);
            const CharCombination ca = combination_coefficients(sa);
            const auto per_a = periodic_version(sa);
            for (Family b : kFamilies) {
                const ResidueClassSpec sb = family_spec(f, b);
                const CharCombination cb = combination_coefficients(sb);
                const PairParameters prm = parameters_from_combinations(ca, cb);
                const double total = prm.s + 1.0 + prm.u + prm.v;
                mean_sq.residual(std::abs(mean_square_periodic(per_a, periodic_version(sb)) - total));
                quad.residual(quadruple_sum_identities(ca, cb).max());
                const PairParameters tab = family_table(p, a, b);
                table_check.residual(std::max({std::abs(prm.s - tab.s), std::abs(prm.u - tab.u), std::abs(prm.v - tab.v),
                                          std::abs(prm.w_f - tab.w_f), std::abs(prm.w_g - tab.w_g)}));
                range.residual(std::max({0.0, -prm.u, prm.u - 1.0, -prm.v, prm.v - 1.0}));
                if (a == b) floor.residual(std::max(0.0, 1.0 - total));
            }
        }
    }
    // Legendre pairs also for p = 3 (mod 4).
    for (auto p : odd_primes(3, 200)) {
        if (p % 4 != 3) continue;
        const FieldPtr f = PrimeField::make(p);
        const ResidueClassSpec sh = family_spec(f, Family::H);
        const CharCombination ch = combination_coefficients(sh);
        const PairParameters prm = parameters_from_combinations(ch, ch);
        const auto per = periodic_version(sh);
        mean_sq.residual(std::abs(mean_square_periodic(per, per) - (prm.s + 1.0 + prm.u + prm.v)));
        quad.residual(quadruple_sum_identities(ch, ch).max());
        const PairParameters tab = family_table(p, Family::H, Family::H);
        table_check.residual(std::max({std::abs(prm.s - tab.s), std::abs(prm.u - tab.u), std::abs(prm.v - tab.v)}));
    }

    Check overlap("overlap_closed_form_uv", 1e-9);
    Check wbounds("w_bounds", 1e-12);
    for (std::uint32_t m = 1; m <= 3; ++m) {
        const auto choices = class_choices(m);
        for (auto p : primes_mod(2 * m, 3, 300)) {
            const FieldPtr f = PrimeField::make(p);
            std::vector<CharCombination> combs;
            for (const auto& cls : choices) combs.push_back(combination_coefficients(ResidueClassSpec(f, m, cls)));
            for (std::size_t i = 0; i < choices.size(); ++i) {
                for (std::size_t j = 0; j < choices.size(); ++j) {
                    const PairParameters prm = parameters_from_combinations(combs[i], combs[j]);
                    const auto [u, v] = closed_form_uv(m, choices[i], choices[j], p);
                    overlap.residual(std::max(std::abs(u - prm.u), std::abs(v - prm.v)));
                    const double wmax = std::sqrt(2.0 * m - 1.0);
                    wbounds.residual(std::max({0.0, 1.0 - prm.w_f, prm.w_f - wmax}));
                    if (p < 100 && m == 3) {
                        quad.residual(quadruple_sum_identities(combs[i], combs[j]).max());
                        const auto per_i = periodic_version(ResidueClassSpec(f, m, choices[i]));
                        const auto per_j = periodic_version(ResidueClassSpec(f, m, choices[j]));
                        mean_sq.residual(std::abs(mean_square_periodic(per_i, per_j) - (prm.s + 1.0 + prm.u + prm.v)));
                    }
                }
            }
        }
    }
    out.push_back(mean_sq.result());
    out.push_back(quad.result());
    out.push_back(table_check.result());
    out.push_back(floor.result());
    out.push_back(range.result());
    out.push_back(overlap.result());
    out.push_back(wbounds.result());
    return out;
}

std::vector<CheckResult> omega_checks() {
    std::vector<CheckResult> out;
    Check closed("omega_closed_form", 1e-10);
    Check remainder("omega_linear_remainder", 1e-10);
    Check decay("remainder_decay", 0.0);
    for (int i = 0; i <= 10000; ++i) {
        const double x = 1.0 + 49.0 * i / 10000.0;
        const double direct = omega(1.0 / x, 0.0);
        const double m = std::floor(x);
        const double y = x - m;
        closed.residual(std::abs(direct - (2 * m + 1 - 2 * m * (m + 1) / x + m * (m + 1) * (2 * m + 1) / (3 * x * x))));
        const double lhs = -2.0 * x / 3.0 + direct;
        remainder.residual(std::abs(lhs - (x - y + 3 * y * y - 2 * y * y * y) / (3 * x * x)));
        decay.require(std::abs(lhs) < 1.0 / (2.0 * x), "decay at x=" + format_real(x));
    }
    out.push_back(closed.result());
    out.push_back(remainder.result());
    out.push_back(decay.result());

    Check upper("omega_upper_bound", 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double x = 0.5 * i;
        for (int j = 0; j < 100; ++j) {
            const double y = -5.0 + 10.0 * j / 99.0;
            const double w = omega(1.0 / x, y);
            upper.require(w >= 0.0 && w <= 2.0 * std::ceil(x), "x=" + format_real(x) + " y=" + format_real(y));
        }
    }
    out.push_back(upper.result());

    Check half_offset("omega_half_offset_bound", 0.0);
    for (int i = 1; i <= 10000; ++i) {
        const double x = 50.0 * i / 10000.0;
        half_offset.require(2.0 * x / 3.0 > omega(1.0 / x, 1.0 / (2.0 * x)), "x=" + format_real(x));
    }
    out.push_back(half_offset.result());

    Check spec("specialization_consistency", 1e-12);
    // U = V = v; only limit_df consumes r.
    auto inputs = [](double s, double v, double lambda, double r) {
        LimitInputs in;
        in.s = s;
        in.u = v;
        in.v = v;
        in.lambda = lambda;
        in.r = r;
        return in;
    };
    for (int i = 1; i <= 30; ++i) {
        const double lambda = 0.1 * i;
        for (int j = 0; j <= 20; ++j) {
            const double r = -1.0 + 0.1 * j;
            for (int k = 0; k <= 8; ++k) {
                const double gamma = kTwoPi / 4.0 * k / 8.0;
                const double c = std::cos(2.0 * gamma);
                spec.residual(std::abs(limit_df_quartic(lambda, r, gamma) -
                                       limit_df(inputs(-(3.0 + c) / 2.0, 1.0, lambda, r))));
                spec.residual(std::abs(limit_cdf_fg(lambda, gamma) - limit_cdf(inputs((-1.0 + c) / 2.0, 0.0, lambda, 0.0))));
            }
            spec.residual(std::abs(limit_df_legendre(lambda, r) - limit_df(inputs(-2.0, 1.0, lambda, r))));
        }
        spec.residual(std::abs(limit_cdf_fh(lambda) - limit_cdf(inputs(0.0, 0.0, lambda, 0.0))));
    }
    out.push_back(spec.result());

    Check opt("optimality_grid", 1e-9);
    const double df_min = optimum_constants().df_min;
    for (int i = 1; i <= 3000; ++i) {
        const double lambda = 1e-3 * i;
        const double inv = 1.0 / lambda;
        const double base = -1.0 - 4.0 * lambda / 3.0 + 2.0 * omega(inv, 0.0);
        for (int j = 0; j <= 2000; ++j) {
            const double r = -1.0 + 1e-3 * j;
            opt.residual(std::max(0.0, df_min - (base + omega(inv, 1.0 + 2.0 * r / lambda))));
        }
    }
    out.push_back(opt.result());
    return out;
}

namespace {

double truncate6(double x) { return std::floor(x * 1e6) / 1e6; }

} // namespace

std::vector<CheckResult> constants_checks() {
    std::vector<CheckResult> out;
    const OptimumConstants oc = optimum_constants();

    Check digits("optimum_constant_digits", 0.0);
    digits.require(format_real(truncate6(oc.df_min)) == "0.157677", "df_min " + format_real(oc.df_min));
    digits.require(format_real(truncate6(oc.mf_max)) == "6.342061", "mf_max " + format_real(oc.mf_max));
    digits.require(format_real(truncate6(oc.lambda_app)) == "1.057827", "lambda_app " + format_real(oc.lambda_app));
    out.push_back(digits.result());

    Check recip("optimum_reciprocal", 1e-9);
    recip.residual(std::abs(oc.mf_max * oc.df_min - 1.0));
    out.push_back(recip.result());

    Check attained("optimum_attained", 1e-9);
    attained.residual(std::abs(limit_df_legendre(oc.lambda_app, (1.0 - 2.0 * oc.lambda_app) / 4.0) - oc.df_min));
    attained.residual(std::abs(limit_df_quartic(oc.lambda_app, (1.0 - 2.0 * oc.lambda_app) / 4.0, 0.0) - oc.df_min));
    out.push_back(attained.result());

    Check sixth("legendre_natural_exact", 0.0);
    sixth.require(limit_df_legendre_exact(Rational(1), Rational(1, 4)) == Rational(1, 6), "not exactly 1/6");
    out.push_back(sixth.result());

    Check third("cdf_fg_minimum", 1e-12);
    third.residual(std::abs(limit_cdf_fg(1.0, kTwoPi / 4.0) - 1.0 / 3.0));
    out.push_back(third.result());

    Check coeffs_check("appended_limit_coefficients", 1e-6);
    const AppendedLimitCoefficients h = appended_limit_coefficients();
    coeffs_check.residual(std::abs(h.df_constant - 0.510286));
    coeffs_check.residual(std::abs(h.df_cos_coefficient + 0.352609));
    coeffs_check.residual(std::abs(h.cdf_constant - 0.653368));
    coeffs_check.residual(std::abs(h.cdf_cos_coefficient - 0.352609));
    out.push_back(coeffs_check.result());

    Check psc("psc_limits", 1e-5);
    psc.require(psc_limit_natural() == Rational(7, 6), "natural limit");
    psc.residual(std::abs(psc_limit_appended(0.0) - 1.163654));
    psc.residual(std::abs(psc_limit_appended(0.0) - psc_limit_appended(kTwoPi / 4.0)) * 1e4);
    psc.residual(std::abs(limit_cdf_fg(oc.lambda_app, kTwoPi / 4.0) - 0.300758));
    out.push_back(psc.result());
    return out;
}

std::vector<CheckResult> negative_control_checks() {
    Check c("dlog_negative_control", 0.0);
    const FieldPtr good = PrimeField::make(13);
    auto swapped = good->dlog_table();
    std::swap(swapped[2], swapped[3]);
    c.require(!check_dlog_bijection(*PrimeField::from_table(13, good->alpha(), swapped)), "swapped entries accepted");
    auto duplicated = good->dlog_table();
    duplicated[5] = duplicated[6];
    c.require(!check_dlog_bijection(*PrimeField::from_table(13, good->alpha(), duplicated)), "duplicate entry accepted");
    c.require(check_dlog_bijection(*good), "valid table rejected");
    return {c.result()};
}

std::vector<CheckResult> all_checks() {
    std::vector<CheckResult> out;
    for (auto suite : {ff_char_checks, seqgen_checks, correlate_checks, kernel_checks, params_checks, omega_checks,
                       constants_checks, negative_control_checks}) {
        auto part = suite();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string format_checks(const std::vector<CheckResult>& results) {
    std::string out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %-34s worst=%.3e tol=%.1e", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                      r.worst, r.tolerance);
        out += buf;
        if (!r.detail.empty()) out += " (" + r.detail + ")";
        out += '\n';
        if (r.passed) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

} // namespace charseq
