#include "verify_suite.hpp"

#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fracline/random_inputs.hpp"
#include "fracline/rl_ops.hpp"
#include "fracline/solver.hpp"
#include "fracline/transform.hpp"
#include "fracline/wellposedness.hpp"

namespace fracline_cli {

namespace {

using namespace fracline;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    return std::sqrt(diff) / std::max({std::sqrt(na), std::sqrt(nb), DBL_MIN});
}

double rel_l2(const std::vector<std::complex<double>>& a,
              const std::vector<std::complex<double>>& b) {
    double diff = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a[i] - b[i]);
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    return std::sqrt(diff) / std::max({std::sqrt(na), std::sqrt(nb), DBL_MIN});
}

SampledFunction normalized(SampledFunction f) {
    const double n = l2_norm(f);
    if (n > 0.0)
        for (double& v : f.values) v /= n;
    return f;
}

// || L v ||^2 against sum_j C_j | v |_{sigma_j}^2 on the same grid.
double split_residual(const OperatorCoefficients& co, const SampledFunction& v) {
    const double lhs = std::pow(l2_norm(apply_L(co, v)), 2);
    const NormConstants nc = norm_constants(co);
    const Spectrum vh = forward_transform(v);
    double rhs = 0.0;
    for (std::size_t j = 0; j < 5; ++j)
        rhs += nc.c[j] * std::pow(hs_seminorm(vh, nc.sigma[j]), 2);
    return std::abs(lhs - rhs) / std::max({lhs, rhs, DBL_MIN});
}

// Same split for the delta-dilated input phi(x / delta), evaluated on the
// correspondingly stretched grid; the right side picks up delta^{1 - 2 sigma_j}.
double scaled_split_residual(const OperatorCoefficients& co, const AnalyticFunction& phi,
                             const GridSpec& grid, double delta) {
    const SampledFunction base = sample(phi, grid);
    const SampledFunction stretched = dilate(base, 1.0 / delta);
    const double lhs = std::pow(l2_norm(apply_L(co, stretched)), 2);

    const NormConstants nc = norm_constants(co);
    const Spectrum base_hat = forward_transform(base);
    double rhs = 0.0;
    for (std::size_t j = 0; j < 5; ++j)
        rhs += nc.c[j] * std::pow(delta, 1.0 - 2.0 * nc.sigma[j]) *
               std::pow(hs_seminorm(base_hat, nc.sigma[j]), 2);
    return std::abs(lhs - rhs) / std::max({lhs, rhs, DBL_MIN});
}

double dilation_commutation_residual(const SampledFunction& f, double s, double kappa) {
    const FracOrder order{s, Side::Left};
    const SampledFunction via_dilation = apply_rl(dilate(f, kappa), order);

    const SampledFunction base = apply_rl(f, order);
    std::vector<double> relabeled = base.values;
    const double factor = std::pow(kappa, s);
    for (double& v : relabeled) v *= factor;
    return rel_l2(via_dilation.values, relabeled);
}

}  // namespace

std::vector<VerifyRow> run_verify_suite(const GridSpec& grid) {
    std::vector<VerifyRow> rows;
    auto add = [&rows](std::string name, double residual, double tolerance) {
        rows.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    };

    const SampledFunction f1 = random_mixture(101).sample(grid);
    const SampledFunction f2 = random_mixture(102).sample(grid);
    const SampledFunction zm1 = random_mixture(201, true).sample(grid);
    const SampledFunction zm2 = random_mixture(202, true).sample(grid);

    // --- transform layer ---------------------------------------------------
    {
        const SampledFunction back = inverse_transform(forward_transform(f1));
        add("round trip through the transforms", rel_l2(back.values, f1.values), 1e-12);
    }
    {
        const double phys = l2_norm(f1);
        const double spec = l2_norm(forward_transform(f1));
        add("discrete energy identity (Parseval)", std::abs(phys - spec) / phys, 1e-12);
    }
    {
        const Spectrum a = forward_transform(f1);
        const Spectrum b = forward_transform(f2);
        std::complex<double> pairing{0.0, 0.0};
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            pairing += a.coeffs[i] * std::conj(b.coeffs[i]);
        pairing /= 2.0 * grid.half_width();
        const double defect = std::abs(inner_product(f1, f2) - pairing.real());
        add("pairing identity (Plancherel)", defect / (l2_norm(f1) * l2_norm(f2)), 1e-12);
    }
    {
        // exp(-pi x^2) is its own transform
        const Spectrum s = forward_transform(sample(AnalyticFunction::gaussian(kPi, 0.0), grid));
        double worst = 0.0;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
            const double xi = grid.frequency(i);
            worst = std::max(worst, std::abs(s.coeffs[i] - std::exp(-kPi * xi * xi)));
        }
        add("gaussian transform matches closed form", worst, 1e-12);
    }
    {
        // 1/cosh(x) maps to pi/cosh(pi^2 xi); its e^{-|x|} tails put the
        // box-truncation floor near 4 e^{-X}, so the tolerance is loose.
        const Spectrum s = forward_transform(sample(AnalyticFunction::sech(1.0), grid));
        double worst = 0.0;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
            const double xi = grid.frequency(i);
            worst = std::max(worst, std::abs(s.coeffs[i] - kPi / std::cosh(kPi * kPi * xi)));
        }
        add("sech transform matches closed form (slow decay)", worst / kPi, 5e-6);
    }

    // --- one-parameter families of the fractional operators -----------------
    {
        const SampledFunction two_step = apply_rl(apply_rl(f1, {0.7, Side::Left}), {0.6, Side::Left});
        const SampledFunction one_step = apply_rl(f1, {1.3, Side::Left});
        add("derivative semigroup D^0.6 after D^0.7 equals D^1.3",
            rel_l2(two_step.values, one_step.values), 1e-11);
    }
    {
        const SampledFunction two_step =
            apply_rl(apply_rl(zm1, {-0.3, Side::Left}), {-0.4, Side::Left});
        const SampledFunction one_step = apply_rl(zm1, {-0.7, Side::Left});
        add("integral semigroup I^0.4 after I^0.3 equals I^0.7",
            rel_l2(two_step.values, one_step.values), 1e-11);
    }
    {
        const SampledFunction round = apply_rl(apply_rl(zm1, {-0.5, Side::Left}), {0.5, Side::Left});
        // the integral drops the (numerically zero) mean, so compare against
        // the input minus its grid average
        double mean = 0.0;
        for (double v : zm1.values) mean += v;
        mean /= static_cast<double>(zm1.values.size());
        std::vector<double> centered = zm1.values;
        for (double& v : centered) v -= mean;
        add("derivative of order 1/2 inverts integral of order 1/2",
            rel_l2(round.values, centered), 1e-11);
    }
    {
        const double strong = inner_product(apply_rl(f1, {0.5, Side::Left}), f2);
        const double weak = inner_product(f1, apply_rl(f2, {0.5, Side::Right}));
        add("adjoint pairing of one-sided derivatives (s = 1/2)",
            std::abs(strong - weak) / (l2_norm(f1) * l2_norm(f2)), 1e-10);
    }
    {
        const double strong = inner_product(apply_rl(zm1, {-0.5, Side::Left}), zm2);
        const double weak = inner_product(zm1, apply_rl(zm2, {-0.5, Side::Right}));
        add("adjoint pairing of one-sided integrals (s = 1/2)",
            std::abs(strong - weak) / (l2_norm(zm1) * l2_norm(zm2)), 1e-10);
    }

    // --- translations and dilations -----------------------------------------
    {
        const long steps = 37;
        const SampledFunction a = translate(apply_rl(f1, {0.7, Side::Left}), steps);
        const SampledFunction b = apply_rl(translate(f1, steps), {0.7, Side::Left});
        add("translation commutes with D^0.7", rel_l2(a.values, b.values), 1e-12);
    }
    {
        const long steps = 37;
        const double d = static_cast<double>(steps) * grid.spacing();
        const Spectrum shifted = forward_transform(translate(f1, steps));
        const Spectrum base = forward_transform(f1);
        std::vector<std::complex<double>> expected(base.coeffs.size());
        for (std::size_t i = 0; i < base.coeffs.size(); ++i)
            expected[i] = base.coeffs[i] * std::polar(1.0, -kTwoPi * grid.frequency(i) * d);
        add("translation phase rule in frequency space", rel_l2(shifted.coeffs, expected), 1e-12);
    }
    {
        const SampledFunction g = sample(AnalyticFunction::gaussian(1.0, 0.0), grid);
        add("dilation commutation for D^0.6 (kappa = 2)",
            dilation_commutation_residual(g, 0.6, 2.0), 1e-12);
    }
    {
        const SampledFunction odd = sample(AnalyticFunction::hermite_gaussian(1, 1.0), grid);
        add("dilation commutation for I^0.5 (kappa = 1/2)",
            dilation_commutation_residual(odd, -0.5, 0.5), 1e-12);
    }

    // --- seminorm symmetry ---------------------------------------------------
    {
        const SampledFunction v = normalized(f1);
        const SampledFunction w = normalized(f2);
        const SymmetryResiduals at03 = symmetry_check(v, w, 0.3);
        add("left and right seminorms agree (mu = 0.3)", at03.left_right, 1e-10);
        add("frequency-side energy route (mu = 0.3)", at03.frequency_side, 1e-8);
        add("cross-term reduction (mu = 0.3)", at03.cross_term, 1e-8);
        add("cross terms cancel at mu = 1/2", symmetry_check(v, w, 0.5).cross_abs, 1e-10);
    }

    // --- operator norm decomposition ----------------------------------------
    add("norm decomposition, set (1,1,0,-1,0.5)",
        split_residual({1.0, 1.0, 0.0, -1.0, 0.5}, f1), 1e-10);
    add("norm decomposition, set (1,0,0,1,0.8)",
        split_residual({1.0, 0.0, 0.0, 1.0, 0.8}, f2), 1e-10);
    add("norm decomposition, set (-0.5,1,0.1,1,0.5)",
        split_residual({-0.5, 1.0, 0.1, 1.0, 0.5}, f1), 1e-10);

    {
        const OperatorCoefficients co{1.0, 0.0, 0.0, 1.0, 0.8};
        const AnalyticFunction phi = AnalyticFunction::gaussian(1.0, 0.0);
        add("scaled norm decomposition (delta = 1/2)",
            scaled_split_residual(co, phi, grid, 0.5), 1e-6);
        add("scaled norm decomposition (delta = 1)",
            scaled_split_residual(co, phi, grid, 1.0), 1e-6);
        add("scaled norm decomposition (delta = 2)",
            scaled_split_residual(co, phi, grid, 2.0), 1e-6);
    }

    // --- weak pairings --------------------------------------------------------
    add("weak pairing residual (s = 1/4)", weak_pairing_residual(f1, f2, 0.25, Side::Left), 1e-9);
    add("weak pairing residual (s = 1/2)", weak_pairing_residual(f1, f2, 0.5, Side::Left), 1e-9);
    add("weak pairing residual (s = 3/2)", weak_pairing_residual(f1, f2, 1.5, Side::Left), 1e-9);

    // --- multiplier algebra ----------------------------------------------------
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> mag_dist(1e-3, 80.0);
        std::bernoulli_distribution sign_dist(0.5);
        std::uniform_real_distribution<double> order_dist(-1.25, 1.25);

        double worst_semigroup = 0.0;
        double worst_first = 0.0;
        for (int t = 0; t < 100000; ++t) {
            const double xi = (sign_dist(rng) ? 1.0 : -1.0) * mag_dist(rng);
            const double s1 = order_dist(rng);
            const double s2 = order_dist(rng);
            for (Side side : {Side::Left, Side::Right}) {
                const std::complex<double> prod =
                    rl_symbol({s1, side}, xi) * rl_symbol({s2, side}, xi);
                const std::complex<double> direct = rl_symbol({s1 + s2, side}, xi);
                worst_semigroup =
                    std::max(worst_semigroup, std::abs(prod - direct) / std::abs(direct));
            }
            const std::complex<double> first = rl_symbol({1.0, Side::Left}, xi);
            const std::complex<double> exact{0.0, kTwoPi * xi};
            worst_first = std::max(worst_first, std::abs(first - exact) / std::abs(exact));
        }
        add("multiplier semigroup over 1e5 random frequencies", worst_semigroup, 1e-13);
        add("order-1 multiplier equals 2 pi i xi", worst_first, 1e-14);
    }

    return rows;
}

}  // namespace fracline_cli
