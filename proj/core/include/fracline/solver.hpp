#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fracline/grid.hpp"
#include "fracline/wellposedness.hpp"

namespace fracline {

// L u = p D^{2-mu} u + q D^{(2-mu)*} u + a D u + b u, evaluated through the
// frequency multipliers of the four terms.
SampledFunction apply_L(const OperatorCoefficients& co, const SampledFunction& u);

struct SolveOptions {
    // Sobolev orders reported in SolveResult::norms; empty means {0, 1, 2-mu}.
    std::vector<double> norm_orders;
};

struct StabilityCheck {
    bool certified;    // classify(co) produced a certificate
    double constant;   // stability constant C (NaN when not certified)
    double lhs;        // ||u||_{H^{2-mu}}
    double rhs;        // C * ||f||_{L2}   (NaN when not certified)
    bool satisfied;    // lhs < rhs, strictly
};

struct SolveResult {
    SampledFunction u;
    std::map<double, double> norms;  // order s -> ||u||_{H^s}
    double residual_rel;             // ||L u - f|| / ||f||
    double min_abs_symbol;           // min over grid frequencies of |H(xi_k)|
    std::size_t zeroed_modes;        // modes dropped because |H| < 1e-6 |b|
    StabilityCheck stability;
};

// Spectral solve u_hat = f_hat / H. Grid frequencies with
// |H(xi_k)| < 1e-6 |b| are zeroed and counted; more than a conjugate pair
// of them raises NearSingularSymbolError. classify(co) runs as part of the
// solve: uncertified coefficients are flagged, not rejected.
SolveResult solve(const OperatorCoefficients& co, const SampledFunction& f,
                  const SolveOptions& options = {});

// Residuals of the left/right seminorm identities for mu in [0, 1):
//   left_right     (D^mu v, D^mu w) vs (D^{mu*} v, D^{mu*} w)
//   frequency_side the same pairing vs (2 pi)^{2 mu} int |xi|^{2 mu} vh wh*
//   cross_term     (D^mu v, D^{mu*} w) + (D^mu w, D^{mu*} v)
//                  vs 2 cos(mu pi) (D^mu v, D^mu w)
// All relative to the Cauchy-Schwarz scale |v|_{H^mu} |w|_{H^mu};
// cross_abs is the unnormalized cross-term defect (the identity
// degenerates to 0 = 0 at mu = 1/2).
struct SymmetryResiduals {
    double left_right;
    double frequency_side;
    double cross_term;
    double cross_abs;
};

SymmetryResiduals symmetry_check(const SampledFunction& v, const SampledFunction& w,
                                 double mu);

// Discrete gain G = max_k sqrt((1 + |2 pi xi_k|^{2(2-mu+m)}) /
// (1 + |2 pi xi_k|^{2m})) / |H(xi_k)|, so every solve on the grid obeys
// ||u||_{H^{2-mu+m}} <= G ||f||_{H^m}. Throws InfiniteGainError if the
// symbol vanishes on the grid.
double regularity_gain(const OperatorCoefficients& co, double m, const GridSpec& grid);

namespace solver_detail {

// Mode inversion seam shared with the tests: divides f_hat by symbol where
// |symbol| >= eps, zeroes the rest, throws NearSingularSymbolError past a
// conjugate pair. Returns the number of zeroed modes.
std::size_t invert_spectrum(const std::vector<std::complex<double>>& symbol,
                            std::vector<std::complex<double>>& coeffs, double eps);

}  // namespace solver_detail

}  // namespace fracline
