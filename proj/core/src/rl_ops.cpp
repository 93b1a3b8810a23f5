#include "fracline/rl_ops.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracline/errors.hpp"
#include "fracline/transform.hpp"

namespace fracline {

namespace {

constexpr double kPi = std::numbers::pi;

double sign_of(double x) { return (x > 0.0) ? 1.0 : ((x < 0.0) ? -1.0 : 0.0); }

}  // namespace

std::complex<double> rl_symbol(FracOrder order, double xi) {
    if (!std::isfinite(order.s) || !std::isfinite(xi))
        throw std::invalid_argument("rl_symbol: order and frequency must be finite");
    if (order.s == 0.0) return {1.0, 0.0};
    if (xi == 0.0) {
        if (order.s > 0.0) return {0.0, 0.0};
        throw SingularSymbolError("rl_symbol: integral order is singular at xi = 0");
    }
    const double magnitude = std::pow(2.0 * kPi * std::abs(xi), order.s);
    const double branch = (order.side == Side::Left) ? 1.0 : -1.0;
    const double quarters = branch * sign_of(xi) * order.s;  // phase in units of pi/2

    // Integer orders land on a coordinate axis; evaluate those exactly so
    // that e.g. the order-1 multiplier is 2 pi i xi with a zero real part
    // instead of cos(pi/2) roundoff.
    double whole = 0.0;
    if (std::modf(quarters, &whole) == 0.0) {
        static constexpr double re_axis[4] = {1.0, 0.0, -1.0, 0.0};
        static constexpr double im_axis[4] = {0.0, 1.0, 0.0, -1.0};
        const int idx = ((static_cast<int>(std::fmod(whole, 4.0)) % 4) + 4) % 4;
        return {magnitude * re_axis[idx], magnitude * im_axis[idx]};
    }
    return std::polar(magnitude, quarters * kPi / 2.0);
}

Spectrum apply_rl(const Spectrum& s, FracOrder order) {
    const std::size_t n = s.grid.n_points();
    if (s.coeffs.size() != n) throw GridMismatchError("apply_rl: coefficient count mismatch");
    if (order.s == 0.0) return s;

    const std::size_t dc = n / 2;  // wavenumber 0
    if (order.s < 0.0) {
        double peak = 0.0;
        for (const auto& c : s.coeffs) peak = std::max(peak, std::abs(c));
        if (std::abs(s.coeffs[dc]) > 1e-10 * peak)
            throw NonzeroMeanError("apply_rl: fractional integral of a nonzero-mean input");
    }

    Spectrum out{s.grid, std::vector<std::complex<double>>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (i == dc) {
            out.coeffs[i] = 0.0;  // derivative symbol vanishes; integral DC is defined as 0
            continue;
        }
        out.coeffs[i] = s.coeffs[i] * rl_symbol(order, s.grid.frequency(i));
    }
    return out;
}

SampledFunction apply_rl(const SampledFunction& f, FracOrder order) {
    return inverse_transform(apply_rl(forward_transform(f), order));
}

std::vector<double> gl_weights(double mu, std::size_t count) {
    std::vector<double> w(count);
    if (count == 0) return w;
    w[0] = 1.0;
    for (std::size_t k = 1; k < count; ++k)
        w[k] = w[k - 1] * (static_cast<double>(k) - 1.0 - mu) / static_cast<double>(k);
    return w;
}

SampledFunction gl_derivative(const SampledFunction& f, double mu, Side side,
                              std::optional<GLScheme> scheme) {
    if (!(mu > 0.0) || mu > 2.0)
        throw std::invalid_argument("gl_derivative: order must lie in (0, 2]");
    const std::size_t n = f.grid.n_points();
    if (f.values.size() != n) throw GridMismatchError("gl_derivative: sample count mismatch");

    const int shift = scheme ? scheme->shift : (mu <= 1.0 ? 0 : 1);
    const std::size_t truncation = scheme ? scheme->truncation : n;
    const std::vector<double> w = gl_weights(mu, truncation);
    const double amplitude = std::pow(f.grid.spacing(), -mu);

    // Samples outside the box are zero: the sum is the line operator applied
    // to the zero-extended input, not a periodic wrap.
    SampledFunction out{f.grid, std::vector<double>(n, 0.0), std::nullopt};
    const long nn = static_cast<long>(n);
    for (long j = 0; j < nn; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < truncation; ++k) {
            const long offset = static_cast<long>(k) - shift;
            const long idx = (side == Side::Left) ? j - offset : j + offset;
            if (idx >= 0 && idx < nn) acc += w[k] * f.values[static_cast<std::size_t>(idx)];
        }
        out.values[static_cast<std::size_t>(j)] = amplitude * acc;
    }
    return out;
}

SampledFunction translate(const SampledFunction& f, long steps) {
    const std::size_t n = f.grid.n_points();
    if (f.values.size() != n) throw GridMismatchError("translate: sample count mismatch");
    const long nn = static_cast<long>(n);

    SampledFunction out{f.grid, std::vector<double>(n), std::nullopt};
    for (long j = 0; j < nn; ++j) {
        long src = (j - steps) % nn;
        if (src < 0) src += nn;
        out.values[static_cast<std::size_t>(j)] = f.values[static_cast<std::size_t>(src)];
    }
    if (f.source) out.source = f.source->translated(static_cast<double>(steps) * f.grid.spacing());
    return out;
}

SampledFunction dilate(const SampledFunction& f, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("dilate: factor must be finite and positive");
    if (!f.source)
        throw UnsupportedInputError(
            "dilate: input has no closed form; resampling file-loaded samples is not supported");
    const GridSpec rescaled(f.grid.n_points(), f.grid.half_width() / kappa);
    return sample(f.source->dilated(kappa), rescaled);
}

double weak_pairing_residual(const SampledFunction& v, const SampledFunction& psi,
                             double s, Side side) {
    const Side other = (side == Side::Left) ? Side::Right : Side::Left;
    const double strong = inner_product(apply_rl(v, {s, side}), psi);
    const double weak = inner_product(v, apply_rl(psi, {s, other}));
    return std::abs(strong - weak) / (l2_norm(v) * l2_norm(psi) + DBL_MIN);
}

}  // namespace fracline
