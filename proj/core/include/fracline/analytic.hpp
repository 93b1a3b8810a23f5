#pragma once

#include <string>

namespace fracline {

enum class Family { Gaussian, HermiteGaussian, Sech };

// Closed-form input families:
//   gaussian(a, c)          exp(-a (x - c)^2),  a > 0
//   hermite_gaussian(n, a)  H_n(x) exp(-a x^2), physicists' H_n, a > 0
//   sech(a)                 1 / cosh(a x),      a > 0
//
// An affine precomposition f0(scale * x - shift) keeps the class closed
// under translation and dilation, so a sampled function can remember its
// closed form and be resampled exactly on another grid.
class AnalyticFunction {
public:
    static AnalyticFunction gaussian(double a, double c);
    static AnalyticFunction hermite_gaussian(int n, double a);
    static AnalyticFunction sech(double a);

    // Accepts the textual forms "gaussian(1,0)", "hermite_gaussian(3, 1.5)",
    // "sech(2)". Throws std::invalid_argument on anything else.
    static AnalyticFunction parse(const std::string& text);

    double operator()(double x) const;

    AnalyticFunction dilated(double kappa) const;  // x -> f(kappa x)
    AnalyticFunction translated(double d) const;   // x -> f(x - d)

    Family family() const { return family_; }
    std::string describe() const;

private:
    AnalyticFunction(Family family, double par0, double par1)
        : family_(family), par0_(par0), par1_(par1) {}

    Family family_;
    double par0_;  // gaussian: a, hermite: n, sech: a
    double par1_;  // gaussian: c, hermite: a, sech: unused
    double scale_ = 1.0;
    double shift_ = 0.0;
};

}  // namespace fracline
