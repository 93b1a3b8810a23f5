#include "fracline/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <new>
#include <stdexcept>

#include "fracline/errors.hpp"

namespace fracline {

namespace {

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
        if (!data) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* data;
};

struct PlanPair {
    fftw_plan forward;
    fftw_plan backward;
};

// The planner is not thread safe, so plan creation is serialized; execution
// through the new-array interface is safe on distinct buffers. Plans are
// kept per transform size; fftw_alloc_complex guarantees the alignment the
// cached plans were built for.
PlanPair plans_for(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, PlanPair> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FftwBuffer in(n), out(n);
    PlanPair pair{
        fftw_plan_dft_1d(static_cast<int>(n), in.data, out.data, FFTW_FORWARD, FFTW_ESTIMATE),
        fftw_plan_dft_1d(static_cast<int>(n), in.data, out.data, FFTW_BACKWARD, FFTW_ESTIMATE)};
    if (!pair.forward || !pair.backward) throw Error("fftw plan creation failed");
    cache.emplace(n, pair);
    return pair;
}

// x_j = -X + j h and xi_k = k/(2X) factor the continuous kernel into
// e^{-2 pi i x_j xi_k} = (-1)^k e^{-2 pi i j k / n}, so the physical-domain
// transform is a plain DFT with an fftshift and an alternating sign.
double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void check_input_size(std::size_t have, std::size_t want, const char* what) {
    if (have != want) throw GridMismatchError(std::string(what) + ": sample count does not match the grid");
}

}  // namespace

Spectrum forward_transform(const SampledFunction& f) {
    const std::size_t n = f.grid.n_points();
    check_input_size(f.values.size(), n, "forward_transform");

    FftwBuffer in(n), out(n);
    for (std::size_t j = 0; j < n; ++j) {
        in.data[j][0] = f.values[j];
        in.data[j][1] = 0.0;
    }
    fftw_execute_dft(plans_for(n).forward, in.data, out.data);

    Spectrum s{f.grid, std::vector<std::complex<double>>(n)};
    const double h = f.grid.spacing();
    for (std::size_t i = 0; i < n; ++i) {
        const long k = f.grid.wavenumber(i);
        const std::size_t src = (i + n / 2) % n;  // k mod n
        s.coeffs[i] = h * parity(k) * std::complex<double>(out.data[src][0], out.data[src][1]);
    }
    return s;
}

SampledFunction inverse_transform(const Spectrum& s) {
    const std::size_t n = s.grid.n_points();
    check_input_size(s.coeffs.size(), n, "inverse_transform");

    // Conjugate symmetry c(-k) = conj c(k) within 1e-10 of the spectrum
    // scale; the DC and unpaired -n/2 coefficients must be (nearly) real.
    double scale = 0.0;
    for (const auto& c : s.coeffs) scale = std::max(scale, std::abs(c));
    const double tol = 1e-10 * scale;
    if (scale > 0.0) {
        if (std::abs(s.coeffs[n / 2].imag()) > tol || std::abs(s.coeffs[0].imag()) > tol)
            throw SymmetryViolationError("inverse_transform: spectrum is not conjugate-symmetric");
        for (std::size_t m = 1; m < n / 2; ++m) {
            const auto defect = s.coeffs[n / 2 + m] - std::conj(s.coeffs[n / 2 - m]);
            if (std::abs(defect) > tol)
                throw SymmetryViolationError("inverse_transform: spectrum is not conjugate-symmetric");
        }
    }

    FftwBuffer in(n), out(n);
    const double h = s.grid.spacing();
    for (std::size_t i = 0; i < n; ++i) {
        const long k = s.grid.wavenumber(i);
        const std::size_t dst = (i + n / 2) % n;
        const std::complex<double> v = s.coeffs[i] * (parity(k) / h);
        in.data[dst][0] = v.real();
        in.data[dst][1] = v.imag();
    }
    fftw_execute_dft(plans_for(n).backward, in.data, out.data);

    SampledFunction f{s.grid, std::vector<double>(n), std::nullopt};
    const double inv_n = 1.0 / static_cast<double>(n);
    double out_scale = 0.0;
    double worst_imag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double re = out.data[j][0] * inv_n;
        const double im = out.data[j][1] * inv_n;
        f.values[j] = re;
        out_scale = std::max(out_scale, std::hypot(re, im));
        worst_imag = std::max(worst_imag, std::abs(im));
    }
    if (out_scale > 0.0 && worst_imag > 1e-10 * out_scale)
        throw SymmetryViolationError("inverse_transform: imaginary residue above threshold");
    return f;
}

double inner_product(const SampledFunction& f, const SampledFunction& g) {
    if (!(f.grid == g.grid)) throw GridMismatchError("inner_product: grids differ");
    check_input_size(f.values.size(), f.grid.n_points(), "inner_product");
    check_input_size(g.values.size(), g.grid.n_points(), "inner_product");
    double acc = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j) acc += f.values[j] * g.values[j];
    return acc * f.grid.spacing();
}

double l2_norm(const SampledFunction& f) {
    check_input_size(f.values.size(), f.grid.n_points(), "l2_norm");
    double acc = 0.0;
    for (double v : f.values) acc += v * v;
    return std::sqrt(acc * f.grid.spacing());
}

double l2_norm(const Spectrum& s) {
    check_input_size(s.coeffs.size(), s.grid.n_points(), "l2_norm");
    double acc = 0.0;
    for (const auto& c : s.coeffs) acc += std::norm(c);
    return std::sqrt(acc / (2.0 * s.grid.half_width()));
}

namespace {

// |2 pi xi|^{2s} with the 0^0 = 1 convention at xi = 0. For s < 0 the DC
// weight is infinite; the caller only accepts it against a zero coefficient.
double seminorm_weight(double abs_two_pi_xi, double s) {
    if (abs_two_pi_xi == 0.0) {
        if (s == 0.0) return 1.0;
        return (s > 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::pow(abs_two_pi_xi, 2.0 * s);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

double hs_seminorm(const Spectrum& s, double order) {
    check_input_size(s.coeffs.size(), s.grid.n_points(), "hs_seminorm");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const double mag2 = std::norm(s.coeffs[i]);
        const double w = seminorm_weight(kTwoPi * std::abs(s.grid.frequency(i)), order);
        if (std::isinf(w)) {
            if (mag2 != 0.0) return std::numeric_limits<double>::infinity();
            continue;  // zero DC mass contributes nothing even for s < 0
        }
        acc += w * mag2;
    }
    return std::sqrt(acc / (2.0 * s.grid.half_width()));
}

double hs_seminorm(const SampledFunction& f, double order) {
    return hs_seminorm(forward_transform(f), order);
}

double hs_norm(const Spectrum& s, double order) {
    const double l2 = l2_norm(s);
    const double semi = hs_seminorm(s, order);
    return std::sqrt(l2 * l2 + semi * semi);
}

double hs_norm(const SampledFunction& f, double order) {
    return hs_norm(forward_transform(f), order);
}

}  // namespace fracline
