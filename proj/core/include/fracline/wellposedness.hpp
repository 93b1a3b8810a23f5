#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "fracline/grid.hpp"

namespace fracline {

// Coefficients of L u = p D^{2-mu} u + q D^{(2-mu)*} u + a D u + b u
// with mu in (0, 1), b != 0 and p^2 + q^2 != 0.
struct OperatorCoefficients {
    double p;
    double q;
    double a;
    double b;
    double mu;

    void validate() const;  // throws std::invalid_argument
};

// Constants of the exact decomposition
//   ||L v||^2 = sum_j C_j ||D^{sigma_j} v||^2
// with sigma = (2-mu, (3-mu)/2, 1, (2-mu)/2, 0) and
//   C1 = p^2 + q^2 + 2 p q cos(sigma1 pi)     (> 0)
//   C2 = 2 a (q - p) cos(sigma2 pi)
//   C3 = a^2                                  (>= 0)
//   C4 = 2 b (p + q) cos(sigma4 pi)
//   C5 = b^2                                  (> 0).
// Only C2 and C4 can be negative; their signs select the certification case.
struct NormConstants {
    std::array<double, 5> c;
    std::array<double, 5> sigma;
};

NormConstants norm_constants(const OperatorCoefficients& co);

// Symbol H(xi) of L: real part (2 pi |xi|)^{2-mu} (p+q) cos(theta) + b,
// imaginary part (2 pi |xi|)^{2-mu} (p-q) sin(theta) + 2 pi a xi, where
// theta = (2-mu) pi sign(xi) / 2. H(0) = b and H(-xi) = conj H(xi).
std::complex<double> operator_symbol(const OperatorCoefficients& co, double xi);

enum class CaseLabel { I, II, III, IV };
std::string to_string(CaseLabel label);

// One inequality of a certificate, transcribed with its evaluated sides.
// margin = (lhs - rhs) / max(1, |lhs|, |rhs|); strict rows need
// margin > 1e-12 to count as satisfied.
struct ConditionRecord {
    std::string description;
    double lhs;
    double rhs;
    double margin;
    bool satisfied;
};

// Certification outcome. When certified, the lower bound
//   |H(xi)|^2 >= alpha^{2 sigma1 - 1} p11 |2 pi xi|^{2 sigma1} + p15 / alpha
// holds for every xi (alpha = 1 in case I), which yields the stability
// constant below. When not certified, alpha/conditions record the scan
// point with the best (least violated) margins.
struct WellposednessReport {
    OperatorCoefficients coefficients;
    NormConstants constants;
    CaseLabel case_label;
    bool certified;
    double alpha;
    double p11;
    double p15;
    std::vector<ConditionRecord> conditions;
};

struct ClassifyOptions {
    // Scanned in the given order; empty means the default descending
    // geometric grid {2^k : k = 20 .. -40}.
    std::vector<double> alpha_grid;
};

std::vector<double> default_alpha_grid();

WellposednessReport classify(const OperatorCoefficients& co,
                             const ClassifyOptions& options = {});

// C = (min{alpha^{2 sigma1 - 1} p11, p15 / alpha})^{-1/2}; the solution of
// L u = f then obeys ||u||_{H^{2-mu}} <= C ||f||_{L2}. Throws
// NoCertificateError when the report is not certified.
double stability_constant(const WellposednessReport& report);

}  // namespace fracline
