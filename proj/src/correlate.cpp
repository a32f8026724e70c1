#include "charseq/correlate.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace charseq {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("sequences must have the same length");
    if (a == 0) throw std::invalid_argument("sequences must be nonempty");
}

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* ptr) const noexcept { fftw_free(ptr); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
    auto* ptr = static_cast<T*>(fftw_malloc(sizeof(T) * n));
    if (ptr == nullptr) throw std::bad_alloc();
    return FftwBuffer<T>(ptr);
}

class Plan {
public:
    explicit Plan(fftw_plan plan) : plan_(plan) {
        if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
    ~Plan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

// Smallest 7-smooth integer >= n.
std::size_t smooth_size(std::size_t n) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t a = 1; a < 2 * n; a *= 2) {
        for (std::size_t b = a; b < 2 * n; b *= 3) {
            for (std::size_t c = b; c < 2 * n; c *= 5) {
                for (std::size_t d = c; d < 2 * n; d *= 7) {
                    if (d >= n && d < best) best = d;
                }
            }
        }
    }
    return best;
}

// Forward real transform of a zero-padded {-1,0,1} sequence into `out`.
void forward_real(const Sequence& s, std::size_t n, double* in, fftw_complex* out) {
    Plan plan([&] {
        std::lock_guard lock(planner_mutex());
        return fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }());
    for (std::size_t i = 0; i < n; ++i) in[i] = i < s.terms.size() ? s.terms[i] : 0.0;
    plan.execute();
}

std::int64_t energy(const Sequence& s) {
    std::int64_t e = 0;
    for (auto t : s.terms) e += t * t;
    return e;
}

std::int64_t sum_squares(const IntProfile& profile) {
    std::int64_t total = 0;
    for (auto v : profile.values) total += v * v;
    return total;
}

} // namespace

IntProfile cross_correlation(const Sequence& f, const Sequence& g) {
    require_same_length(f.length(), g.length());
    const auto len = static_cast<std::int64_t>(f.length());
    IntProfile out;
    out.min_shift = -(len - 1);
    out.values.assign(static_cast<std::size_t>(2 * len - 1), 0);
    const std::int8_t* fp = f.terms.data();
    const std::int8_t* gp = g.terms.data();
    for (std::int64_t s = -(len - 1); s < len; ++s) {
        const std::int64_t lo = s < 0 ? -s : 0;
        const std::int64_t hi = s < 0 ? len : len - s;
        std::int32_t acc = 0;
        for (std::int64_t j = lo; j < hi; ++j) acc += static_cast<std::int32_t>(fp[j]) * gp[j + s];
        out.values[static_cast<std::size_t>(s + len - 1)] = acc;
    }
    return out;
}

ComplexProfile cross_correlation(const ComplexSequence& f, const ComplexSequence& g) {
    require_same_length(f.length(), g.length());
    const auto len = static_cast<std::int64_t>(f.length());
    ComplexProfile out;
    out.min_shift = -(len - 1);
    out.values.assign(static_cast<std::size_t>(2 * len - 1), cplx{});
    for (std::int64_t s = -(len - 1); s < len; ++s) {
        const std::int64_t lo = s < 0 ? -s : 0;
        const std::int64_t hi = s < 0 ? len : len - s;
        cplx acc{};
        for (std::int64_t j = lo; j < hi; ++j) acc += f.terms[j] * std::conj(g.terms[j + s]);
        out.values[static_cast<std::size_t>(s + len - 1)] = acc;
    }
    return out;
}

IntProfile cross_correlation_fft(const Sequence& f, const Sequence& g) {
    require_same_length(f.length(), g.length());
    const std::size_t len = f.length();
    const std::size_t n = smooth_size(2 * len - 1);
    const std::size_t bins = n / 2 + 1;

    auto in = fftw_buffer<double>(n);
    auto fhat = fftw_buffer<fftw_complex>(bins);
    auto ghat = fftw_buffer<fftw_complex>(bins);
    forward_real(f, n, in.get(), fhat.get());
    forward_real(g, n, in.get(), ghat.get());

    // conj(F) G is the transform of the circular correlation sum_j f_j g_{j+s}.
    for (std::size_t k = 0; k < bins; ++k) {
        const cplx prod = std::conj(cplx{fhat[k][0], fhat[k][1]}) * cplx{ghat[k][0], ghat[k][1]};
        ghat[k][0] = prod.real();
        ghat[k][1] = prod.imag();
    }
    Plan inverse([&] {
        std::lock_guard lock(planner_mutex());
        return fftw_plan_dft_c2r_1d(static_cast<int>(n), ghat.get(), in.get(), FFTW_ESTIMATE);
    }());
    inverse.execute();

    const auto ilen = static_cast<std::int64_t>(len);
    IntProfile out;
    out.min_shift = -(ilen - 1);
    out.values.resize(2 * len - 1);
    for (std::int64_t s = -(ilen - 1); s < ilen; ++s) {
        const std::size_t src = s < 0 ? n - static_cast<std::size_t>(-s) : static_cast<std::size_t>(s);
        out.values[static_cast<std::size_t>(s + ilen - 1)] =
            static_cast<std::int64_t>(std::llround(in[src] / static_cast<double>(n)));
    }
    return out;
}

double sum_squared_correlation_fft(const Sequence& f, const Sequence& g) {
    require_same_length(f.length(), g.length());
    const std::size_t n = smooth_size(2 * f.length() - 1);
    const std::size_t bins = n / 2 + 1;

    auto in = fftw_buffer<double>(n);
    auto out = fftw_buffer<fftw_complex>(bins);
    std::vector<double> fpow(bins);
    forward_real(f, n, in.get(), out.get());
    for (std::size_t k = 0; k < bins; ++k) fpow[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    forward_real(g, n, in.get(), out.get());

    // Real input: bins 1..ceil(n/2)-1 stand for two conjugate frequencies each.
    long double total = 0.0L;
    for (std::size_t k = 0; k < bins; ++k) {
        const double gpow = out[k][0] * out[k][0] + out[k][1] * out[k][1];
        const bool self_conjugate = (k == 0) || (n % 2 == 0 && k == n / 2);
        total += (self_conjugate ? 1.0L : 2.0L) * fpow[k] * gpow;
    }
    return static_cast<double>(total / static_cast<long double>(n));
}

Ratio cdf_exact(const Sequence& f, const Sequence& g) {
    require_same_length(f.length(), g.length());
    const std::int64_t ef = energy(f);
    const std::int64_t eg = energy(g);
    if (ef == 0 || eg == 0) throw std::domain_error("demerit factor undefined for an all-zero sequence");
    const Ratio r{sum_squares(cross_correlation(f, g)), ef * eg};
    const std::int64_t d = std::gcd(r.num, r.den);
    return {r.num / d, r.den / d};
}

Ratio df_exact(const Sequence& f) {
    const std::int64_t e = energy(f);
    if (e == 0) throw std::domain_error("demerit factor undefined for an all-zero sequence");
    const std::int64_t num = sum_squares(cross_correlation(f, f)) - e * e;
    const std::int64_t den = e * e;
    const std::int64_t d = std::gcd(num, den);
    return {num / d, den / d};
}

double cdf(const Sequence& f, const Sequence& g) { return cdf_exact(f, g).value(); }
double df(const Sequence& f) { return df_exact(f).value(); }

double cdf(const ComplexSequence& f, const ComplexSequence& g) {
    const ComplexProfile cfg = cross_correlation(f, g);
    const double c_ff = std::abs(cross_correlation(f, f).at(0));
    const double c_gg = std::abs(cross_correlation(g, g).at(0));
    if (c_ff == 0.0 || c_gg == 0.0) throw std::domain_error("demerit factor undefined for an all-zero sequence");
    double total = 0.0;
    for (const auto& v : cfg.values) total += std::norm(v);
    return total / (c_ff * c_gg);
}

double df(const ComplexSequence& f) { return cdf(f, f) - 1.0; }

double cdf_fft(const Sequence& f, const Sequence& g) {
    const std::int64_t ef = energy(f);
    const std::int64_t eg = energy(g);
    if (ef == 0 || eg == 0) throw std::domain_error("demerit factor undefined for an all-zero sequence");
    return sum_squared_correlation_fft(f, g) / (static_cast<double>(ef) * static_cast<double>(eg));
}

MeritReport merit_report(const Sequence& f, const Sequence& g) {
    MeritReport r;
    r.cdf_exact = cdf_exact(f, g);
    r.df_f_exact = df_exact(f);
    r.df_g_exact = df_exact(g);
    r.cdf = r.cdf_exact.value();
    r.cmf = r.cdf > 0.0 ? 1.0 / r.cdf : std::numeric_limits<double>::infinity();
    r.df_f = r.df_f_exact.value();
    r.df_g = r.df_g_exact.value();
    r.psc = std::sqrt(r.df_f * r.df_g) + r.cdf;
    return r;
}

double psc(const Sequence& f, const Sequence& g) { return merit_report(f, g).psc; }

std::vector<cplx> periodic_version(const CharCombination& comb) {
    const std::uint32_t p = comb.field()->p();
    std::vector<cplx> out(p);
    for (std::uint32_t a = 0; a < p; ++a) out[a] = comb(a);
    return out;
}

std::vector<std::int8_t> periodic_version(const ResidueClassSpec& spec) {
    std::vector<std::int8_t> out(spec.p());
    for (std::uint32_t a = 0; a < spec.p(); ++a) out[a] = spec.value(a);
    return out;
}

std::vector<std::int64_t> periodic_cross_correlation(std::span<const std::int8_t> u, std::span<const std::int8_t> v) {
    require_same_length(u.size(), v.size());
    const std::size_t n = u.size();
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        std::int64_t acc = 0;
        std::size_t k = s;
        for (std::size_t j = 0; j < n; ++j) {
            acc += u[j] * v[k];
            if (++k == n) k = 0;
        }
        out[s] = acc;
    }
    return out;
}

std::vector<cplx> periodic_cross_correlation(std::span<const cplx> u, std::span<const cplx> v) {
    require_same_length(u.size(), v.size());
    const std::size_t n = u.size();
    std::vector<cplx> out(n);
    for (std::size_t s = 0; s < n; ++s) {
        cplx acc{};
        std::size_t k = s;
        for (std::size_t j = 0; j < n; ++j) {
            acc += u[j] * std::conj(v[k]);
            if (++k == n) k = 0;
        }
        out[s] = acc;
    }
    return out;
}

namespace {

std::vector<cplx> dft_with_sign(std::span<const cplx> u, bool inverse) {
    const std::size_t n = u.size();
    if (n == 0) throw std::invalid_argument("transform length must be positive");
    std::vector<cplx> twiddle(n);
    for (std::size_t k = 0; k < n; ++k) twiddle[k] = root_of_unity(inverse ? (n - k) % n : k, n);
    std::vector<cplx> out(n);
    for (std::size_t a = 0; a < n; ++a) {
        cplx acc{};
        std::size_t idx = 0;
        for (std::size_t x = 0; x < n; ++x) {
            acc += u[x] * twiddle[idx];
            idx += a;
            if (idx >= n) idx -= n;
        }
        out[a] = inverse ? acc / static_cast<double>(n) : acc;
    }
    return out;
}

} // namespace

std::vector<cplx> dft(std::span<const cplx> u) { return dft_with_sign(u, false); }
std::vector<cplx> inverse_dft(std::span<const cplx> u_hat) { return dft_with_sign(u_hat, true); }

double mean_square_periodic(std::span<const std::int8_t> u, std::span<const std::int8_t> v) {
    const auto pc = periodic_cross_correlation(u, v);
    const double n = static_cast<double>(u.size());
    if (n < 2) throw std::invalid_argument("period must be at least 2");
    long double total = 0.0L;
    for (auto c : pc) total += static_cast<long double>(c) * static_cast<long double>(c);
    return static_cast<double>(total / (n * (n - 1.0)));
}

double mean_square_periodic(std::span<const cplx> u, std::span<const cplx> v) {
    const auto pc = periodic_cross_correlation(u, v);
    const double n = static_cast<double>(u.size());
    if (n < 2) throw std::invalid_argument("period must be at least 2");
    double total = 0.0;
    for (const auto& c : pc) total += std::norm(c);
    return total / (n * (n - 1.0));
}

} // namespace charseq
