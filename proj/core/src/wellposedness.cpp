#include "fracline/wellposedness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fracline/errors.hpp"

namespace fracline {

namespace {

constexpr double kPi = std::numbers::pi;

// Strict inequality with a relative slack so boundary cases never certify
// on roundoff alone.
bool strictly_greater(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return lhs - rhs > 1e-12 * scale;
}

double margin_of(double lhs, double rhs) {
    return (lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

ConditionRecord strict_condition(std::string description, double lhs, double rhs) {
    return {std::move(description), lhs, rhs, margin_of(lhs, rhs), strictly_greater(lhs, rhs)};
}

ConditionRecord sign_condition(std::string description, double lhs, bool satisfied) {
    return {std::move(description), lhs, 0.0, margin_of(lhs, 0.0), satisfied};
}

// Scale-adjusted masses m_j = C_j alpha^{1 - 2 sigma_j}: the coefficients of
// |H(xi/alpha)|^2 alpha as a polynomial in eta^{2 sigma_j}, eta = |2 pi xi|.
std::array<double, 5> masses(const NormConstants& nc, double alpha) {
    std::array<double, 5> m{};
    for (std::size_t j = 0; j < 5; ++j)
        m[j] = nc.c[j] * std::pow(alpha, 1.0 - 2.0 * nc.sigma[j]);
    return m;
}

struct CaseEvaluation {
    std::vector<ConditionRecord> conditions;
    bool feasible;
    double p11;
    double p15;
};

// The sign rows select the case; the two alpha-dependent rows are the
// certificate. The regrouped leading/zeroth masses p11/p15 follow the
// absorb-negative-mass-into-neighbor construction: slots with larger
// exponents can swallow negative mass for eta >= 1 and slots with smaller
// exponents for eta <= 1, so the regrouped form stays pointwise below
// |H|^2 for every eta.
CaseEvaluation evaluate_case(CaseLabel label, const NormConstants& nc, double b, double alpha) {
    const auto& c = nc.c;
    const auto& s = nc.sigma;
    const auto m = masses(nc, alpha);
    CaseEvaluation ev{};

    auto pw = [&](double expo) { return std::pow(alpha, expo); };

    switch (label) {
        case CaseLabel::I:
            ev.conditions.push_back(sign_condition("C2 >= 0", c[1], c[1] >= 0.0));
            ev.conditions.push_back(sign_condition("C4 >= 0", c[3], c[3] >= 0.0));
            ev.feasible = c[1] >= 0.0 && c[3] >= 0.0;
            ev.p11 = c[0];
            ev.p15 = c[4];
            return ev;

        case CaseLabel::II: {
            ev.conditions.push_back(
                strict_condition("b^2 > -C4 * alpha^(2*(sigma5 - sigma4))", b * b,
                                 -c[3] * pw(2.0 * (s[4] - s[3]))));
            ev.conditions.push_back(strict_condition(
                "C1*alpha^(1-2*sigma1) + C2*alpha^(1-2*sigma2) + C3*alpha^(1-2*sigma3) + "
                "C4*alpha^(1-2*sigma4) > 0",
                m[0] + m[1] + m[2] + m[3], 0.0));
            ev.feasible = ev.conditions[0].satisfied && ev.conditions[1].satisfied;
            // Negative mass at j = 4 is absorbed by j = 2, then j = 3, the
            // remainder by j = 1.
            double rest = -m[3];
            const double into2 = std::min(m[1], rest);
            rest -= into2;
            const double into3 = std::min(m[2], rest);
            rest -= into3;
            ev.p11 = m[0] - rest;
            ev.p15 = m[3] + m[4];
            return ev;
        }

        case CaseLabel::III: {
            ev.conditions.push_back(strict_condition(
                "b^2 > -(C2*alpha^(2*(sigma5-sigma2)) + C3*alpha^(2*(sigma5-sigma3)) + "
                "C4*alpha^(2*(sigma5-sigma4)))",
                b * b,
                -(c[1] * pw(2.0 * (s[4] - s[1])) + c[2] * pw(2.0 * (s[4] - s[2])) +
                  c[3] * pw(2.0 * (s[4] - s[3])))));
            ev.conditions.push_back(strict_condition(
                "C1*alpha^(1-2*sigma1) + C2*alpha^(1-2*sigma2) > 0", m[0] + m[1], 0.0));
            ev.feasible = ev.conditions[0].satisfied && ev.conditions[1].satisfied;
            // Negative mass at j = 2 is absorbed by j = 3, then j = 4, the
            // remainder by j = 5.
            double rest = -m[1];
            const double into3 = std::min(m[2], rest);
            rest -= into3;
            const double into4 = std::min(m[3], rest);
            rest -= into4;
            ev.p11 = m[0] + m[1];
            ev.p15 = m[4] - rest;
            return ev;
        }

        case CaseLabel::IV:
            ev.conditions.push_back(strict_condition(
                "b^2 > -(C2*alpha^(2*(sigma5-sigma2)) + C4*alpha^(2*(sigma5-sigma4)))", b * b,
                -(c[1] * pw(2.0 * (s[4] - s[1])) + c[3] * pw(2.0 * (s[4] - s[3])))));
            ev.conditions.push_back(strict_condition(
                "C1*alpha^(1-2*sigma1) + C2*alpha^(1-2*sigma2) + C4*alpha^(1-2*sigma4) > 0",
                m[0] + m[1] + m[3], 0.0));
            ev.feasible = ev.conditions[0].satisfied && ev.conditions[1].satisfied;
            ev.p11 = m[0] + m[1] + m[3];
            ev.p15 = m[1] + m[3] + m[4];
            return ev;
    }
    throw std::logic_error("evaluate_case: unreachable");
}

double worst_margin(const CaseEvaluation& ev) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& cond : ev.conditions) worst = std::min(worst, cond.margin);
    return worst;
}

}  // namespace

void OperatorCoefficients::validate() const {
    const bool finite = std::isfinite(p) && std::isfinite(q) && std::isfinite(a) &&
                        std::isfinite(b) && std::isfinite(mu);
    if (!finite) throw std::invalid_argument("operator coefficients must be finite");
    if (b == 0.0) throw std::invalid_argument("operator needs b != 0");
    if (p == 0.0 && q == 0.0) throw std::invalid_argument("operator needs p^2 + q^2 != 0");
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("operator needs mu in (0, 1)");
}

NormConstants norm_constants(const OperatorCoefficients& co) {
    co.validate();
    NormConstants nc{};
    nc.sigma = {2.0 - co.mu, (3.0 - co.mu) / 2.0, 1.0, (2.0 - co.mu) / 2.0, 0.0};
    nc.c[0] = co.p * co.p + co.q * co.q + 2.0 * co.p * co.q * std::cos(nc.sigma[0] * kPi);
    nc.c[1] = 2.0 * co.a * (co.q - co.p) * std::cos(nc.sigma[1] * kPi);
    nc.c[2] = co.a * co.a;
    nc.c[3] = 2.0 * co.b * (co.p + co.q) * std::cos(nc.sigma[3] * kPi);
    nc.c[4] = co.b * co.b;
    return nc;
}

std::complex<double> operator_symbol(const OperatorCoefficients& co, double xi) {
    if (!std::isfinite(xi)) throw std::invalid_argument("operator_symbol: frequency must be finite");
    const double sign = (xi > 0.0) ? 1.0 : ((xi < 0.0) ? -1.0 : 0.0);
    const double eta = 2.0 * kPi * std::abs(xi);
    const double t = std::pow(eta, 2.0 - co.mu);
    const double theta = (2.0 - co.mu) * kPi / 2.0;
    const double re = t * (co.p + co.q) * std::cos(theta) + co.b;
    const double im = t * (co.p - co.q) * std::sin(theta) * sign + 2.0 * kPi * co.a * xi;
    return {re, im};
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        case CaseLabel::IV: return "IV";
    }
    return "?";
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    grid.reserve(61);
    for (int k = 20; k >= -40; --k) grid.push_back(std::pow(2.0, k));
    return grid;
}

WellposednessReport classify(const OperatorCoefficients& co, const ClassifyOptions& options) {
    const NormConstants nc = norm_constants(co);

    WellposednessReport report{};
    report.coefficients = co;
    report.constants = nc;

    const double c2 = nc.c[1];
    const double c4 = nc.c[3];

    if (c2 >= 0.0 && c4 >= 0.0) {
        auto ev = evaluate_case(CaseLabel::I, nc, co.b, 1.0);
        report.case_label = CaseLabel::I;
        report.certified = true;
        report.alpha = 1.0;
        report.p11 = ev.p11;
        report.p15 = ev.p15;
        report.conditions = std::move(ev.conditions);
        return report;
    }

    const CaseLabel label = (c2 >= 0.0)   ? CaseLabel::II
                            : (c4 >= 0.0) ? CaseLabel::III
                                          : CaseLabel::IV;
    report.case_label = label;

    const std::vector<double> grid =
        options.alpha_grid.empty() ? default_alpha_grid() : options.alpha_grid;

    double best_margin = -std::numeric_limits<double>::infinity();
    double best_alpha = grid.empty() ? 1.0 : grid.front();
    std::vector<ConditionRecord> best_conditions;

    for (double alpha : grid) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("classify: alpha grid entries must be finite and positive");
        auto ev = evaluate_case(label, nc, co.b, alpha);
        if (ev.feasible) {
            report.certified = true;
            report.alpha = alpha;
            report.p11 = ev.p11;
            report.p15 = ev.p15;
            report.conditions = std::move(ev.conditions);
            if (!(report.p11 > 0.0) || !(report.p15 > 0.0))
                throw std::logic_error("classify: regrouped constants must be positive");
            return report;
        }
        const double margin = worst_margin(ev);
        if (margin > best_margin) {
            best_margin = margin;
            best_alpha = alpha;
            best_conditions = std::move(ev.conditions);
        }
    }

    report.certified = false;
    report.alpha = best_alpha;
    report.p11 = 0.0;
    report.p15 = 0.0;
    report.conditions = std::move(best_conditions);
    return report;
}

double stability_constant(const WellposednessReport& report) {
    if (!report.certified)
        throw NoCertificateError("stability_constant: coefficients were not certified");
    const double sigma1 = report.constants.sigma[0];
    const double lead = std::pow(report.alpha, 2.0 * sigma1 - 1.0) * report.p11;
    const double zeroth = report.p15 / report.alpha;
    return 1.0 / std::sqrt(std::min(lead, zeroth));
}

}  // namespace fracline
