#pragma once

#include "fracline/grid.hpp"

namespace fracline {

// Discrete realization of F(w)(xi) = integral e^{-2 pi i x xi} w(x) dx.
//
// forward_transform returns coeffs(k) = h * sum_j e^{-2 pi i x_j xi_k} f_j,
// inverse_transform returns f_j = (1/2X) * sum_k e^{+2 pi i x_j xi_k} c_k,
// and the two are exact mutual inverses up to roundoff. Parseval holds in
// the form h * sum |f_j|^2 = (1/2X) * sum |c_k|^2.
Spectrum forward_transform(const SampledFunction& f);

// Requires a conjugate-symmetric spectrum (real function) within 1e-10
// relative; the residual imaginary part of the output is checked against
// the same threshold and then discarded.
SampledFunction inverse_transform(const Spectrum& s);

// h-weighted quadrature pairing (f, g) = h * sum_j f_j g_j.
double inner_product(const SampledFunction& f, const SampledFunction& g);

double l2_norm(const SampledFunction& f);
double l2_norm(const Spectrum& s);  // sqrt(sum |c_k|^2 / 2X), equals the above by Parseval

// Sobolev seminorm and norm of order s:
//   seminorm^2 = sum_k |2 pi xi_k|^{2s} |c_k|^2 / (2X)
//   norm^2     = l2^2 + seminorm^2
// The xi = 0 weight follows 0^0 = 1, so hs_norm(f, 0) = sqrt(2) * l2_norm(f).
double hs_seminorm(const Spectrum& s, double order);
double hs_seminorm(const SampledFunction& f, double order);
double hs_norm(const Spectrum& s, double order);
double hs_norm(const SampledFunction& f, double order);

}  // namespace fracline
