#include "fracline/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracline {

GridSpec::GridSpec(std::size_t n_points, double half_width)
    : n_(n_points), half_width_(half_width) {
    if (n_points < 8 || n_points % 2 != 0)
        throw std::invalid_argument("grid needs an even point count >= 8");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("grid half-width must be finite and positive");
    spacing_ = 2.0 * half_width / static_cast<double>(n_points);
}

SampledFunction sample(const AnalyticFunction& f, const GridSpec& grid) {
    SampledFunction out{grid, std::vector<double>(grid.n_points()), f};
    for (std::size_t j = 0; j < grid.n_points(); ++j) out.values[j] = f(grid.node(j));
    return out;
}

bool decays_at_edges(const SampledFunction& f, double margin, double rel) {
    double peak = 0.0;
    for (double v : f.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return true;
    const double cut = f.grid.half_width() - margin;
    for (std::size_t j = 0; j < f.grid.n_points(); ++j) {
        if (std::abs(f.grid.node(j)) > cut && std::abs(f.values[j]) > rel * peak) return false;
    }
    return true;
}

}  // namespace fracline
