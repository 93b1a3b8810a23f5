// Acceptance gate: thirteen end-to-end checks of the operator identities,
// the classifier and the solver at fixed tolerances on the default grid
// (4096 points, half-width 16). Each check prints a single [PASS]/[FAIL]
// line; the exit status is nonzero when any check fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fracline/analytic.hpp"
#include "fracline/grid.hpp"
#include "fracline/io.hpp"
#include "fracline/random_inputs.hpp"
#include "fracline/rl_ops.hpp"
#include "fracline/solver.hpp"
#include "fracline/transform.hpp"
#include "fracline/wellposedness.hpp"
#include "helpers.hpp"

using namespace fracline;

namespace {

constexpr double kPi = std::numbers::pi;
const GridSpec kGrid(4096, 16.0);

struct Outcome {
    bool pass;
    std::string detail;
};

bool report(int id, const char* label, const Outcome& outcome) {
    std::printf("[%s] C%02d %s: %s\n", outcome.pass ? "PASS" : "FAIL", id, label,
                outcome.detail.c_str());
    std::fflush(stdout);
    return outcome.pass;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// ---------------------------------------------------------------- C01

Outcome check_parseval() {
    const double tol = 1e-12;
    std::vector<AnalyticFunction> family;
    family.push_back(AnalyticFunction::gaussian(kPi, 0.0));
    family.push_back(AnalyticFunction::gaussian(1.0, 0.0));
    family.push_back(AnalyticFunction::gaussian(2.0, 0.75));
    family.push_back(AnalyticFunction::gaussian(0.5, -1.5));
    for (int n = 1; n <= 4; ++n) family.push_back(AnalyticFunction::hermite_gaussian(n, 1.0));

    double worst = 0.0;
    for (const auto& fn : family) {
        auto f = sample(fn, kGrid);
        auto fh = forward_transform(f);
        worst = std::max(worst, std::abs(l2_norm(fh) - l2_norm(f)) / l2_norm(f));
        worst = std::max(worst, testutil::rel_max_diff(inverse_transform(fh).values, f.values));
    }
    // continuum anchor for the self-dual member: ||exp(-pi x^2)||^2 = 1/sqrt 2
    auto g = sample(AnalyticFunction::gaussian(kPi, 0.0), kGrid);
    worst = std::max(worst,
                     std::abs(l2_norm(g) * l2_norm(g) - 1.0 / std::sqrt(2.0)) * std::sqrt(2.0));

    return {worst <= tol, fmt("max residual %.2e (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C02

Outcome check_symbol_algebra() {
    const double tol = 1e-13;
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> order(-1.25, 1.25);
    std::uniform_real_distribution<double> logxi(std::log(1e-3), std::log(80.0));

    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double s1 = order(rng), s2 = order(rng);
        const double xi = (i % 2 ? 1.0 : -1.0) * std::exp(logxi(rng));
        const Side side = (i % 4 < 2) ? Side::Left : Side::Right;
        const auto a = rl_symbol({s1, side}, xi);
        const auto b = rl_symbol({s2, side}, xi);
        const auto sum = rl_symbol({s1 + s2, side}, xi);
        worst = std::max(worst, std::abs(a * b - sum) / std::abs(sum));
        if (s1 != 0.0) {
            const auto inv = rl_symbol({-s1, side}, xi);
            worst = std::max(worst, std::abs(a * inv - 1.0));
        }
    }
    return {worst <= tol, fmt("max residual %.2e over 1e5 samples (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C03

Outcome check_applied_semigroup() {
    const double tol = 1e-11;
    std::vector<SampledFunction> inputs;
    for (int n : {1, 2, 3}) inputs.push_back(sample(AnalyticFunction::hermite_gaussian(n, 1.0), kGrid));
    for (std::uint64_t seed : {61, 62, 63}) inputs.push_back(random_mixture(seed, true).sample(kGrid));

    double worst = 0.0;
    for (const auto& f : inputs) {
        for (Side side : {Side::Left, Side::Right}) {
            auto two = apply_rl(apply_rl(f, {0.3, side}), {0.4, side});
            worst = std::max(worst, testutil::rel_l2_diff(two.values, apply_rl(f, {0.7, side}).values));

            auto high = apply_rl(apply_rl(f, {0.6, side}), {0.7, side});
            worst = std::max(worst, testutil::rel_l2_diff(high.values, apply_rl(f, {1.3, side}).values));

            auto ints = apply_rl(apply_rl(f, {-0.3, side}), {-0.45, side});
            worst = std::max(worst, testutil::rel_l2_diff(ints.values, apply_rl(f, {-0.75, side}).values));

            auto round = apply_rl(apply_rl(f, {-0.5, side}), {0.5, side});
            worst = std::max(worst, testutil::rel_l2_diff(round.values, f.values));

            auto other = apply_rl(apply_rl(f, {0.6, side}), {-0.6, side});
            worst = std::max(worst, testutil::rel_l2_diff(other.values, f.values));
        }
    }
    return {worst <= tol, fmt("max residual %.2e (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C04

Outcome check_integral_adjoint() {
    const double tol = 1e-10;
    // the fractional integrals need zero-mean inputs: odd orders have it
    // for any width, even orders only at unit width (orthogonality to H_0)
    std::vector<AnalyticFunction> family;
    for (int n : {1, 3, 5})
        for (double a : {0.6, 1.0, 1.7}) family.push_back(AnalyticFunction::hermite_gaussian(n, a));
    for (int n : {2, 4, 6}) family.push_back(AnalyticFunction::hermite_gaussian(n, 1.0));
    family.push_back(AnalyticFunction::hermite_gaussian(5, 1.2));
    family.push_back(AnalyticFunction::hermite_gaussian(1, 0.7));
    family.push_back(AnalyticFunction::hermite_gaussian(3, 1.4));
    family.push_back(AnalyticFunction::hermite_gaussian(1, 1.0).translated(1.25));
    family.push_back(AnalyticFunction::hermite_gaussian(3, 0.8).translated(-2.5));
    family.push_back(AnalyticFunction::hermite_gaussian(1, 1.9).translated(2.5));
    family.push_back(AnalyticFunction::hermite_gaussian(2, 1.0).translated(-1.25));
    family.push_back(AnalyticFunction::hermite_gaussian(4, 1.0).translated(0.5));

    double worst = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
        auto v = sample(family[i], kGrid);
        auto w = sample(family[(i * 7 + 3) % family.size()], kGrid);
        for (int tenth = 1; tenth <= 9; ++tenth) {
            const double mu = 0.1 * tenth;
            worst = std::max(worst, weak_pairing_residual(v, w, -mu, Side::Left));
            worst = std::max(worst, weak_pairing_residual(v, w, -mu, Side::Right));
        }
    }
    return {worst <= tol, fmt("max residual %.2e over 20 pairs (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C05

double dilation_residual(const SampledFunction& f, double kappa, FracOrder order) {
    // on the rescaled grid the index-k frequency is kappa xi_k, so the
    // dilated coefficients carry 1/kappa and the multiplier kappa^s
    auto lhs = forward_transform(apply_rl(dilate(f, kappa), order));
    auto base = forward_transform(apply_rl(f, order));
    const double scale = std::pow(kappa, order.s - 1.0);
    std::vector<std::complex<double>> want(base.coeffs.size());
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = scale * base.coeffs[i];
    return testutil::rel_l2_diff_c(lhs.coeffs, want);
}

Outcome check_commutation() {
    const double tol = 1e-9;
    double worst = 0.0;

    auto f = random_mixture(21).sample(kGrid);
    auto fh = forward_transform(f);
    const auto n = static_cast<long>(kGrid.n_points());
    for (long steps : {1L, 37L, -220L}) {
        for (double s : {0.7, 1.3}) {
            auto a = apply_rl(translate(f, steps), {s, Side::Left});
            auto b = translate(apply_rl(f, {s, Side::Left}), steps);
            worst = std::max(worst, testutil::rel_l2_diff(a.values, b.values));
        }
        // phase rule of the pure shift
        auto th = forward_transform(translate(f, steps));
        std::vector<std::complex<double>> want(fh.coeffs.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            const double angle = -2.0 * kPi * static_cast<double>(kGrid.wavenumber(i)) *
                                 static_cast<double>(steps) / static_cast<double>(n);
            want[i] = fh.coeffs[i] * std::exp(std::complex<double>(0.0, angle));
        }
        worst = std::max(worst, testutil::rel_l2_diff_c(th.coeffs, want));
    }

    auto even = sample(AnalyticFunction::gaussian(1.0, 0.0), kGrid);
    auto odd = sample(AnalyticFunction::hermite_gaussian(1, 1.0), kGrid);
    for (double kappa : {0.5, 2.0}) {
        for (double s : {0.6, 1.3})
            worst = std::max(worst, dilation_residual(even, kappa, {s, Side::Left}));
        worst = std::max(worst, dilation_residual(odd, kappa, {-0.5, Side::Right}));
    }
    return {worst <= tol, fmt("max residual %.2e (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C06

Outcome check_symmetry_suite() {
    const double rel_tol = 1e-8;
    const double abs_tol = 1e-10;
    double worst_rel = 0.0, worst_abs = 0.0;
    for (int i = 0; i < 20; ++i) {
        auto v = testutil::normalized(random_mixture(100 + i).sample(kGrid));
        auto w = testutil::normalized(random_mixture(200 + i).sample(kGrid));
        for (double mu : {0.0, 0.3, 0.5, 0.7}) {
            auto r = symmetry_check(v, w, mu);
            worst_rel = std::max({worst_rel, r.left_right, r.frequency_side});
            if (mu == 0.5)
                worst_abs = std::max(worst_abs, r.cross_abs);
            else
                worst_rel = std::max(worst_rel, r.cross_term);
        }
    }
    const bool pass = worst_rel <= rel_tol && worst_abs <= abs_tol;
    return {pass, fmt("max residual %.2e (tol %.0e), half-order cross sum %.2e (tol 1e-10)",
                      worst_rel, rel_tol, worst_abs)};
}

// ---------------------------------------------------------------- C07

double split_residual(const OperatorCoefficients& co, const SampledFunction& v) {
    const auto nc = norm_constants(co);
    const double lv = l2_norm(apply_L(co, v));
    auto vh = forward_transform(v);
    double rhs = 0.0;
    for (int j = 0; j < 5; ++j) {
        const double semi = hs_seminorm(vh, nc.sigma[j]);
        rhs += nc.c[j] * semi * semi;
    }
    return std::abs(lv * lv - rhs) / (lv * lv);
}

double scaled_split_residual(const OperatorCoefficients& co, const AnalyticFunction& phi,
                             double delta) {
    const auto nc = norm_constants(co);
    auto base = sample(phi, kGrid);
    auto wide = dilate(base, 1.0 / delta);  // phi(x / delta) on the delta-scaled grid
    const double lv = l2_norm(apply_L(co, wide));
    auto ph = forward_transform(base);
    double rhs = 0.0;
    for (int j = 0; j < 5; ++j) {
        const double semi = hs_seminorm(ph, nc.sigma[j]);
        rhs += nc.c[j] * std::pow(delta, 1.0 - 2.0 * nc.sigma[j]) * semi * semi;
    }
    return std::abs(lv * lv - rhs) / (lv * lv);
}

Outcome check_norm_decomposition() {
    const double tol = 1e-6;
    const OperatorCoefficients sets[] = {
        {1.0, 1.0, 0.0, -1.0, 0.5},
        {1.0, 0.0, 0.0, 1.0, 0.8},
        {2.0, 1.0, 1.0, 3.0, 0.4},
    };
    double worst = 0.0;
    for (const auto& co : sets) {
        for (std::uint64_t seed = 300; seed < 310; ++seed)
            worst = std::max(worst, split_residual(co, random_mixture(seed).sample(kGrid)));

        const AnalyticFunction shapes[] = {
            AnalyticFunction::gaussian(1.0, 0.0),
            AnalyticFunction::hermite_gaussian(2, 1.0),
            AnalyticFunction::gaussian(0.8, 0.5),
        };
        for (const auto& phi : shapes)
            for (double delta : {0.5, 1.0, 2.0})
                worst = std::max(worst, scaled_split_residual(co, phi, delta));
    }
    return {worst <= tol, fmt("max residual %.2e over 3 coefficient sets (tol %.0e)", worst, tol)};
}

// ---------------------------------------------------------------- C08

Outcome check_gl_convergence() {
    const double lo = 1.7, hi = 2.3;
    auto probe = AnalyticFunction::hermite_gaussian(6, 1.0);
    const std::size_t levels[] = {512, 1024, 2048, 4096};

    double worst_lo = 1e300, worst_hi = 0.0;
    for (double mu : {0.4, 0.7, 1.3}) {
        double prev = 0.0;
        for (std::size_t level = 0; level < 4; ++level) {
            GridSpec grid(levels[level], 16.0);
            auto f = sample(probe, grid);
            auto gl = gl_derivative(f, mu, Side::Left);
            auto sp = apply_rl(f, {mu, Side::Left});
            const double err = testutil::rel_l2_diff(gl.values, sp.values);
            if (level > 0) {
                const double ratio = prev / err;
                worst_lo = std::min(worst_lo, ratio);
                worst_hi = std::max(worst_hi, ratio);
            }
            prev = err;
        }
    }
    const bool pass = worst_lo >= lo && worst_hi <= hi;
    return {pass, fmt("halving ratios within [%.3f, %.3f] (need [1.7, 2.3])", worst_lo, worst_hi)};
}

// ---------------------------------------------------------------- C09

bool revalidate_conditions(const WellposednessReport& rep) {
    const auto& c = rep.constants.c;
    const auto& s = rep.constants.sigma;
    const double alpha = rep.alpha;
    const double b2 = rep.coefficients.b * rep.coefficients.b;
    auto pw = [&](double e) { return std::pow(alpha, e); };
    auto mass = [&](int j) { return c[j] * pw(1.0 - 2.0 * s[j]); };

    std::vector<std::pair<double, double>> want;  // lhs, rhs per recorded row
    switch (rep.case_label) {
        case CaseLabel::I:
            want = {{c[1], 0.0}, {c[3], 0.0}};
            break;
        case CaseLabel::II:
            want = {{b2, -c[3] * pw(2.0 * (s[4] - s[3]))},
                    {mass(0) + mass(1) + mass(2) + mass(3), 0.0}};
            break;
        case CaseLabel::III:
            want = {{b2, -(c[1] * pw(2.0 * (s[4] - s[1])) + c[2] * pw(2.0 * (s[4] - s[2])) +
                           c[3] * pw(2.0 * (s[4] - s[3])))},
                    {mass(0) + mass(1), 0.0}};
            break;
        case CaseLabel::IV:
            want = {{b2, -(c[1] * pw(2.0 * (s[4] - s[1])) + c[3] * pw(2.0 * (s[4] - s[3])))},
                    {mass(0) + mass(1) + mass(3), 0.0}};
            break;
    }
    if (rep.conditions.size() != want.size()) return false;
    const bool strict = rep.case_label != CaseLabel::I;  // case I rows are sign checks
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto& row = rep.conditions[i];
        const double scale = std::max({1.0, std::abs(want[i].first), std::abs(want[i].second)});
        if (std::abs(row.lhs - want[i].first) > 1e-12 * scale) return false;
        if (std::abs(row.rhs - want[i].second) > 1e-12 * scale) return false;
        if (!row.satisfied) return false;
        if (strict ? !(row.margin > 1e-12) : !(row.lhs >= row.rhs)) return false;
    }

    // the certificate must lower-bound the squared symbol everywhere
    const double sigma1 = s[0];
    for (int k = -40; k <= 30; ++k) {
        const double xi = std::pow(10.0, 0.1 * k);
        for (double signed_xi : {xi, -xi}) {
            const double lhs = std::norm(operator_symbol(rep.coefficients, signed_xi));
            const double eta = 2.0 * kPi * xi;
            const double bound = std::pow(alpha, 2.0 * sigma1 - 1.0) * rep.p11 *
                                     std::pow(eta, 2.0 * sigma1) +
                                 rep.p15 / alpha;
            if (lhs < bound * (1.0 - 1e-9)) return false;
        }
    }
    return true;
}

Outcome check_classifier() {
    auto first = classify(OperatorCoefficients{1.0, 1.0, 0.0, -1.0, 0.5});
    auto second = classify(OperatorCoefficients{1.0, 0.0, 0.0, 1.0, 0.8});
    auto third = classify(OperatorCoefficients{1.0, 1.0, 0.0, 2.0, 0.5});

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    bool pass = first.case_label == CaseLabel::I && first.certified && first.alpha == 1.0 &&
                std::abs(stability_constant(first) - 1.0) <= 1e-12;
    pass = pass && second.case_label == CaseLabel::II && second.certified &&
           second.alpha == 1.0 && std::abs(stability_constant(second) - phi) <= 1e-12 * phi;
    pass = pass && !third.certified;
    pass = pass && revalidate_conditions(first) && revalidate_conditions(second);

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "case %s C=%.6g; case %s alpha=%g C=%.6g; third set certified=%s",
                  to_string(first.case_label).c_str(), first.certified ? stability_constant(first) : 0.0,
                  to_string(second.case_label).c_str(), second.alpha,
                  second.certified ? stability_constant(second) : 0.0,
                  third.certified ? "yes" : "no");
    return {pass, buf};
}

// ---------------------------------------------------------------- C10 and C12

struct SolveBatch {
    double worst_residual = 0.0;
    bool all_strictly_stable = true;
    double worst_gain_ratio[4] = {0.0, 0.0, 0.0, 0.0};
};

SolveBatch run_solve_batch(const OperatorCoefficients& co) {
    SolveBatch batch;
    double gains[4];
    for (int m = 0; m < 4; ++m) gains[m] = regularity_gain(co, m, kGrid);

    for (int i = 0; i < 100; ++i) {
        auto f = random_mixture(1000 + i).sample(kGrid);
        auto r = solve(co, f);
        batch.worst_residual = std::max(batch.worst_residual, r.residual_rel);
        if (!(r.stability.certified && r.stability.satisfied && r.stability.lhs < r.stability.rhs))
            batch.all_strictly_stable = false;

        auto fh = forward_transform(f);
        auto uh = forward_transform(r.u);
        for (int m = 0; m < 4; ++m) {
            const double lhs = hs_norm(uh, 2.0 - co.mu + m);
            const double rhs = gains[m] * hs_norm(fh, static_cast<double>(m));
            batch.worst_gain_ratio[m] = std::max(batch.worst_gain_ratio[m], lhs / rhs);
        }
    }
    return batch;
}

Outcome check_solve_stability(const SolveBatch& one, const SolveBatch& two) {
    const double tol = 1e-10;
    const double worst = std::max(one.worst_residual, two.worst_residual);
    const bool stable = one.all_strictly_stable && two.all_strictly_stable;
    const bool pass = worst <= tol && stable;
    return {pass, fmt("max residual %.2e (tol %.0e); strict stability on 200 solves: ", worst, tol) +
                      (stable ? "yes" : "NO")};
}

Outcome check_regularity_gain(const SolveBatch& one, const SolveBatch& two) {
    double worst = 0.0;
    for (int m = 0; m < 4; ++m)
        worst = std::max({worst, one.worst_gain_ratio[m], two.worst_gain_ratio[m]});
    return {worst <= 1.0 + 1e-12,
            fmt("max ||u||_{2-mu+m} / (G ||f||_m) = %.12f for m in 0..3", worst)};
}

// ---------------------------------------------------------------- C11

Outcome check_solve_round_trip() {
    const double rt_tol = 1e-10, shift_tol = 1e-9;
    const OperatorCoefficients sets[] = {
        {1.0, 1.0, 0.0, -1.0, 0.5},
        {1.0, 0.0, 0.0, 1.0, 0.8},
    };
    double worst_rt = 0.0, worst_shift = 0.0;
    for (const auto& co : sets) {
        for (std::uint64_t seed = 2000; seed < 2003; ++seed) {
            auto v = random_mixture(seed).sample(kGrid);
            auto back = solve(co, apply_L(co, v));
            worst_rt = std::max(worst_rt, testutil::rel_l2_diff(back.u.values, v.values));
        }
        for (std::uint64_t seed = 2010; seed < 2013; ++seed) {
            auto f = random_mixture(seed).sample(kGrid);
            auto lhs = solve(co, apply_rl(f, {1.0, Side::Left})).u;
            auto rhs = apply_rl(solve(co, f).u, {1.0, Side::Left});
            worst_shift = std::max(worst_shift, testutil::rel_l2_diff(lhs.values, rhs.values));
        }
    }
    const bool pass = worst_rt <= rt_tol && worst_shift <= shift_tol;
    return {pass, fmt("round trip %.2e (tol 1e-10), derivative shift %.2e (tol 1e-9)", worst_rt,
                      worst_shift)};
}

// ---------------------------------------------------------------- C13

Outcome check_weak_pairing() {
    const double tol = 1e-9;
    const std::pair<AnalyticFunction, AnalyticFunction> pairs[] = {
        {AnalyticFunction::gaussian(1.0, 0.0), AnalyticFunction::gaussian(0.7, -1.0)},
        {AnalyticFunction::hermite_gaussian(1, 1.0), AnalyticFunction::gaussian(2.0, 0.75)},
        {AnalyticFunction::hermite_gaussian(2, 1.0), AnalyticFunction::hermite_gaussian(3, 0.8)},
        {AnalyticFunction::gaussian(kPi, 0.0), AnalyticFunction::hermite_gaussian(4, 1.2)},
    };
    double worst = 0.0;
    for (const auto& [vf, wf] : pairs) {
        auto v = sample(vf, kGrid);
        auto w = sample(wf, kGrid);
        for (double s : {0.25, 0.5, 1.5}) {
            worst = std::max(worst, weak_pairing_residual(v, w, s, Side::Left));
            worst = std::max(worst, weak_pairing_residual(v, w, s, Side::Right));
        }
    }
    return {worst <= tol, fmt("max residual %.2e (tol %.0e)", worst, tol)};
}

}  // namespace

int main() {
    const auto started = std::chrono::steady_clock::now();
    bool all = true;

    all &= report(1, "discrete Parseval and transform round trip", check_parseval());
    all &= report(2, "multiplier algebra over random orders", check_symbol_algebra());
    all &= report(3, "applied semigroup and inverse identities", check_applied_semigroup());
    all &= report(4, "adjoint pairing of the fractional integrals", check_integral_adjoint());
    all &= report(5, "translation and dilation commutation", check_commutation());
    all &= report(6, "left/right seminorm symmetry suite", check_symmetry_suite());
    all &= report(7, "norm decomposition and its dilation scaling", check_norm_decomposition());
    all &= report(8, "finite-difference convergence to the spectral operator",
                  check_gl_convergence());
    all &= report(9, "well-posedness classifier on the reference sets", check_classifier());

    const SolveBatch one = run_solve_batch({1.0, 1.0, 0.0, -1.0, 0.5});
    const SolveBatch two = run_solve_batch({1.0, 0.0, 0.0, 1.0, 0.8});
    all &= report(10, "spectral solve with certified stability", check_solve_stability(one, two));
    all &= report(11, "solve round trip and derivative shift", check_solve_round_trip());
    all &= report(12, "regularity gain across source smoothness", check_regularity_gain(one, two));
    all &= report(13, "weak-derivative pairing across orders", check_weak_pairing());

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::printf("%s: 13 criteria in %lld ms\n", all ? "acceptance passed" : "ACCEPTANCE FAILED",
                static_cast<long long>(elapsed));
    return all ? 0 : 1;
}
