#pragma once

// Aperiodic and periodic correlation, demerit/merit factors, the
// Pursley-Sarwate criterion, and the finite Fourier transform over one period.

#include "charseq/seqgen.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace charseq {

/// C_{f,g}(s) for s = min_shift .. -min_shift; zero outside.
template <class T>
struct CorrelationProfile {
    std::int64_t min_shift = 0;
    std::vector<T> values;

    T at(std::int64_t s) const {
        const std::int64_t idx = s - min_shift;
        if (idx < 0 || idx >= static_cast<std::int64_t>(values.size())) return T{};
        return values[static_cast<std::size_t>(idx)];
    }
};

using IntProfile = CorrelationProfile<std::int64_t>;
using ComplexProfile = CorrelationProfile<cplx>;

/// Direct O(l^2) summation of sum_j f_j conj(g_{j+s}); exact for integer terms.
/// Throws std::invalid_argument on a length mismatch.
IntProfile cross_correlation(const Sequence& f, const Sequence& g);
ComplexProfile cross_correlation(const ComplexSequence& f, const ComplexSequence& g);

/// FFT-based profile, rounded to the nearest integer.
IntProfile cross_correlation_fft(const Sequence& f, const Sequence& g);

/// sum_s |C_{f,g}(s)|^2 via Parseval on a zero-padded transform; no profile is
/// materialized, so this scales to lengths in the millions.
double sum_squared_correlation_fft(const Sequence& f, const Sequence& g);

/// An exact nonnegative rational num/den.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// sum_s |C_{f,g}(s)|^2 / (|C_{f,f}(0)| |C_{g,g}(0)|).  Throws std::domain_error
/// for an all-zero input.
Ratio cdf_exact(const Sequence& f, const Sequence& g);
/// cdf(f,f) - 1 as an exact rational.
Ratio df_exact(const Sequence& f);

double cdf(const Sequence& f, const Sequence& g);
double df(const Sequence& f);
double cdf(const ComplexSequence& f, const ComplexSequence& g);
double df(const ComplexSequence& f);

/// CDF through the FFT path; for lengths beyond the direct kernel's reach.
double cdf_fft(const Sequence& f, const Sequence& g);

struct MeritReport {
    Ratio cdf_exact;
    Ratio df_f_exact;
    Ratio df_g_exact;
    double cdf = 0.0;
    double cmf = 0.0; // 1/cdf, or +inf when cdf = 0
    double df_f = 0.0;
    double df_g = 0.0;
    double psc = 0.0; // sqrt(df_f df_g) + cdf
};

MeritReport merit_report(const Sequence& f, const Sequence& g);
double psc(const Sequence& f, const Sequence& g);

/// (F(0), ..., F(p-1)), independent of any shift or length.
std::vector<cplx> periodic_version(const CharCombination& comb);
std::vector<std::int8_t> periodic_version(const ResidueClassSpec& spec);

/// PC(s) = sum_{j mod n} u_j conj(v_{j+s}).
std::vector<std::int64_t> periodic_cross_correlation(std::span<const std::int8_t> u, std::span<const std::int8_t> v);
std::vector<cplx> periodic_cross_correlation(std::span<const cplx> u, std::span<const cplx> v);

/// u_hat_a = sum_x u_x exp(2 pi i a x / n), O(n^2) with exact twiddle indices.
std::vector<cplx> dft(std::span<const cplx> u);
/// u_x = (1/n) sum_a u_hat_a exp(-2 pi i a x / n).
std::vector<cplx> inverse_dft(std::span<const cplx> u_hat);

/// (1/(n(n-1))) sum_a |PC_{u,v}(a)|^2 for period-n sequences.
double mean_square_periodic(std::span<const std::int8_t> u, std::span<const std::int8_t> v);
double mean_square_periodic(std::span<const cplx> u, std::span<const cplx> v);

} // namespace charseq
