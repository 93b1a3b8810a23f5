#include "fracline/random_inputs.hpp"

#include <cmath>
#include <random>

namespace fracline {

double Mixture::operator()(double x) const {
    double acc = 0.0;
    for (const auto& bump : bumps) {
        const double y = x - bump.center;
        const double shape = std::exp(-bump.width * y * y);
        acc += bump.derivative ? bump.amplitude * y * shape : bump.amplitude * shape;
    }
    return acc;
}

SampledFunction Mixture::sample(const GridSpec& grid) const {
    SampledFunction f{grid, std::vector<double>(grid.n_points()), std::nullopt};
    for (std::size_t j = 0; j < grid.n_points(); ++j) f.values[j] = (*this)(grid.node(j));
    return f;
}

Mixture random_mixture(std::uint64_t seed, bool zero_mean) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count_dist(2, 5);
    std::uniform_real_distribution<double> magnitude_dist(0.3, 1.5);
    std::bernoulli_distribution sign_dist(0.5);
    std::uniform_real_distribution<double> width_dist(0.4, 3.0);
    std::uniform_real_distribution<double> center_dist(-4.0, 4.0);

    Mixture mix;
    const int count = count_dist(rng);
    mix.bumps.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Mixture::Bump bump{};
        bump.amplitude = (sign_dist(rng) ? 1.0 : -1.0) * magnitude_dist(rng);
        bump.width = width_dist(rng);
        bump.center = center_dist(rng);
        bump.derivative = zero_mean || sign_dist(rng);
        mix.bumps.push_back(bump);
    }
    return mix;
}

}  // namespace fracline
