#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "fracline/analytic.hpp"

namespace fracline {

// Uniform grid x_j = -X + j h on [-X, X) with spacing h = 2X / n and an even
// point count n >= 8. The matching frequencies are xi_k = k / (2X) for
// k = -n/2 .. n/2 - 1 and are always exposed in that natural order; storage
// index i corresponds to wavenumber k = i - n/2.
class GridSpec {
public:
    GridSpec(std::size_t n_points, double half_width);

    std::size_t n_points() const { return n_; }
    double half_width() const { return half_width_; }
    double spacing() const { return spacing_; }
    double freq_spacing() const { return 1.0 / (2.0 * half_width_); }

    double node(std::size_t j) const { return -half_width_ + static_cast<double>(j) * spacing_; }
    long wavenumber(std::size_t index) const {
        return static_cast<long>(index) - static_cast<long>(n_ / 2);
    }
    double frequency(std::size_t index) const {
        return static_cast<double>(wavenumber(index)) / (2.0 * half_width_);
    }

    bool operator==(const GridSpec&) const = default;

private:
    std::size_t n_;
    double half_width_;
    double spacing_;
};

// Real samples on a grid. `source` is set when the values came from an
// AnalyticFunction; operators that cannot preserve a closed form drop it.
struct SampledFunction {
    GridSpec grid;
    std::vector<double> values;
    std::optional<AnalyticFunction> source;
};

// Frequency-side coefficients in natural order (index i <-> k = i - n/2).
// coeffs approximate the continuous transform at xi_k, i.e. they carry the
// physical scaling h * sum_j e^{-2 pi i x_j xi_k} f(x_j).
struct Spectrum {
    GridSpec grid;
    std::vector<std::complex<double>> coeffs;
};

SampledFunction sample(const AnalyticFunction& f, const GridSpec& grid);

// True when every sample with |x_j| > X - margin stays below rel * max|f|.
// The spectral operator identities assume inputs that pass this test; the
// periodization error of everything downstream is controlled by it.
bool decays_at_edges(const SampledFunction& f, double margin = 2.0, double rel = 1e-12);

}  // namespace fracline
