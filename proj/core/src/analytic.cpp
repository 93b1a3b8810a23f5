#include "fracline/analytic.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace fracline {

namespace {

double hermite(int n, double x) {
    // Physicists' recurrence H_{k+1} = 2 x H_k - 2 k H_{k-1}.
    double hkm1 = 0.0;
    double hk = 1.0;
    for (int k = 0; k < n; ++k) {
        double next = 2.0 * x * hk - 2.0 * static_cast<double>(k) * hkm1;
        hkm1 = hk;
        hk = next;
    }
    return hk;
}

[[noreturn]] void bad_spec(const std::string& text, const char* why) {
    throw std::invalid_argument("analytic function '" + text + "': " + why);
}

}  // namespace

AnalyticFunction AnalyticFunction::gaussian(double a, double c) {
    if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(c))
        throw std::invalid_argument("gaussian(a, c) needs finite a > 0");
    return AnalyticFunction(Family::Gaussian, a, c);
}

AnalyticFunction AnalyticFunction::hermite_gaussian(int n, double a) {
    if (n < 0 || n > 40) throw std::invalid_argument("hermite_gaussian(n, a) needs 0 <= n <= 40");
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("hermite_gaussian(n, a) needs finite a > 0");
    return AnalyticFunction(Family::HermiteGaussian, static_cast<double>(n), a);
}

AnalyticFunction AnalyticFunction::sech(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("sech(a) needs finite a > 0");
    return AnalyticFunction(Family::Sech, a, 0.0);
}

double AnalyticFunction::operator()(double x) const {
    const double y = scale_ * x - shift_;
    switch (family_) {
        case Family::Gaussian: {
            const double d = y - par1_;
            return std::exp(-par0_ * d * d);
        }
        case Family::HermiteGaussian:
            return hermite(static_cast<int>(par0_), y) * std::exp(-par1_ * y * y);
        case Family::Sech:
            return 1.0 / std::cosh(par0_ * y);
    }
    return 0.0;
}

AnalyticFunction AnalyticFunction::dilated(double kappa) const {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("dilation factor must be finite and positive");
    AnalyticFunction out = *this;
    out.scale_ = scale_ * kappa;
    return out;
}

AnalyticFunction AnalyticFunction::translated(double d) const {
    if (!std::isfinite(d)) throw std::invalid_argument("translation offset must be finite");
    AnalyticFunction out = *this;
    out.shift_ = shift_ + scale_ * d;
    return out;
}

std::string AnalyticFunction::describe() const {
    char buf[160];
    switch (family_) {
        case Family::Gaussian:
            std::snprintf(buf, sizeof buf, "gaussian(%g,%g)", par0_, par1_);
            break;
        case Family::HermiteGaussian:
            std::snprintf(buf, sizeof buf, "hermite_gaussian(%d,%g)", static_cast<int>(par0_), par1_);
            break;
        case Family::Sech:
            std::snprintf(buf, sizeof buf, "sech(%g)", par0_);
            break;
    }
    std::string out = buf;
    if (scale_ != 1.0 || shift_ != 0.0) {
        std::snprintf(buf, sizeof buf, " @ (%.17g x - %.17g)", scale_, shift_);
        out += buf;
    }
    return out;
}

AnalyticFunction AnalyticFunction::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_space();
    std::size_t name_begin = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
    const std::string name = text.substr(name_begin, i - name_begin);
    skip_space();
    if (i >= text.size() || text[i] != '(') bad_spec(text, "expected '(' after the family name");
    ++i;

    std::vector<double> args;
    skip_space();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip_space();
            const char* begin = text.c_str() + i;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) bad_spec(text, "expected a numeric argument");
            i += static_cast<std::size_t>(end - begin);
            args.push_back(v);
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            bad_spec(text, "expected ',' or ')'");
        }
    }
    skip_space();
    if (i != text.size()) bad_spec(text, "trailing characters");

    if (name == "gaussian") {
        if (args.size() != 2) bad_spec(text, "gaussian takes (a, c)");
        return gaussian(args[0], args[1]);
    }
    if (name == "hermite_gaussian") {
        if (args.size() != 2) bad_spec(text, "hermite_gaussian takes (n, a)");
        double n_int = 0.0;
        if (std::modf(args[0], &n_int) != 0.0) bad_spec(text, "hermite order must be an integer");
        return hermite_gaussian(static_cast<int>(n_int), args[1]);
    }
    if (name == "sech") {
        if (args.size() != 1) bad_spec(text, "sech takes (a)");
        return sech(args[0]);
    }
    bad_spec(text, "unknown family (expected gaussian, hermite_gaussian or sech)");
}

}  // namespace fracline
