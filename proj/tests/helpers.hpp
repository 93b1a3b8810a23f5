#pragma once

// Small numeric helpers shared by the unit suites and the acceptance gate.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fracline/grid.hpp"
#include "fracline/transform.hpp"

namespace testutil {

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// max |a - b| / max |b|
inline double rel_max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    const double scale = max_abs(b);
    return scale > 0.0 ? diff / scale : diff;
}

// ||a - b|| / ||b||
inline double rel_l2_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        scale += b[i] * b[i];
    }
    return scale > 0.0 ? std::sqrt(diff / scale) : std::sqrt(diff);
}

inline double rel_l2_diff_c(const std::vector<std::complex<double>>& a,
                            const std::vector<std::complex<double>>& b) {
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a[i] - b[i]);
        scale += std::norm(b[i]);
    }
    return scale > 0.0 ? std::sqrt(diff / scale) : std::sqrt(diff);
}

// (a, b) = sum a_k conj(b_k) / 2X, the frequency-side quadrature pairing
inline std::complex<double> spectral_pairing(const fracline::Spectrum& a,
                                             const fracline::Spectrum& b) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) acc += a.coeffs[i] * std::conj(b.coeffs[i]);
    return acc / (2.0 * a.grid.half_width());
}

inline fracline::SampledFunction normalized(fracline::SampledFunction f) {
    const double norm = fracline::l2_norm(f);
    for (double& v : f.values) v /= norm;
    f.source.reset();
    return f;
}

}  // namespace testutil
