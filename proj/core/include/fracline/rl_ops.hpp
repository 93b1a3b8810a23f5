#pragma once

#include <complex>
#include <optional>

#include "fracline/grid.hpp"

namespace fracline {

enum class Side { Left, Right };

// Fractional order s with a side. s > 0 is a derivative, s < 0 an integral
// of order -s, s = 0 the identity.
struct FracOrder {
    double s;
    Side side;
};

// Frequency multiplier of the order: |2 pi xi|^s e^{+- i s pi sign(xi) / 2},
// the plus branch for Left and the minus branch for Right, so the two sides
// are complex conjugates and rl_symbol({1, Left}, xi) = 2 pi i xi exactly.
// s = 0 gives 1 everywhere; s > 0 gives 0 at xi = 0; s < 0 at xi = 0 throws
// SingularSymbolError.
std::complex<double> rl_symbol(FracOrder order, double xi);

// Multiplies the spectrum by rl_symbol. For s < 0 the input must have
// (numerically) zero mean: |c(0)| <= 1e-10 * max|c| or NonzeroMeanError;
// the DC output is set to 0.
Spectrum apply_rl(const Spectrum& s, FracOrder order);

// Round trip through the transforms. The closed-form source is dropped.
SampledFunction apply_rl(const SampledFunction& f, FracOrder order);

// Shifted Grunwald-Letnikov scheme: first-order brute-force realization of
// the same operators, used as an independent cross-check of apply_rl.
//   out(x) = h^{-mu} sum_{k>=0} w_k f(x -+ (k - shift) h)
// with w_0 = 1, w_k = w_{k-1} (k - 1 - mu) / k (minus for Left, plus for
// Right). Samples outside the box count as zero. Defaults: shift 0 for
// mu in (0,1], shift 1 for mu in (1,2]; truncation = grid length.
struct GLScheme {
    int shift;
    std::size_t truncation;
};

SampledFunction gl_derivative(const SampledFunction& f, double mu, Side side,
                              std::optional<GLScheme> scheme = std::nullopt);

std::vector<double> gl_weights(double mu, std::size_t count);

// Cyclic shift by whole grid steps: out(x_j) = f(x_{j - steps}), wrapping
// periodically. Exact on samples; commutes with apply_rl.
SampledFunction translate(const SampledFunction& f, long steps);

// Dilation (Pi_kappa f)(x) = f(kappa x). The result lives on the grid
// rescaled by 1/kappa (same n_points, half_width / kappa) so the sampling
// stays aligned with the dilation, and the values are produced by exact
// evaluation of the closed form. Inputs without a closed-form source
// (file-loaded samples) raise UnsupportedInputError: interpolating them
// would inject resampling noise far above the identity-test tolerances.
SampledFunction dilate(const SampledFunction& f, double kappa);

// Relative defect of the integration-by-parts pairing,
//   |(v, D^{s*} psi) - (D^s v, psi)| / (||v|| ||psi|| + eps),
// where D^s acts on the given side and D^{s*} on the opposite one.
// Negative s probes the adjoint pairing of the integrals.
double weak_pairing_residual(const SampledFunction& v, const SampledFunction& psi,
                             double s, Side side);

}  // namespace fracline
