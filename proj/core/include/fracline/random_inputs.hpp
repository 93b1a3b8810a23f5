#pragma once

#include <cstdint>
#include <vector>

#include "fracline/grid.hpp"

namespace fracline {

// Seeded Gaussian-bump mixtures used as randomized test inputs. Keeping the
// closed form around lets a test re-evaluate the same function on a finer
// grid for oracle comparisons. Centers stay within |c| <= 4 and widths
// above 0.4, so on the default boxes the samples decay at the edges.
struct Mixture {
    struct Bump {
        double amplitude;
        double width;
        double center;
        bool derivative;  // amplitude (x-c) exp(-w (x-c)^2): exactly zero mean
    };

    std::vector<Bump> bumps;

    double operator()(double x) const;
    SampledFunction sample(const GridSpec& grid) const;
};

// zero_mean = true draws derivative bumps only, so the sampled mean vanishes
// to roundoff and the mixture is admissible for fractional integrals.
Mixture random_mixture(std::uint64_t seed, bool zero_mean = false);

}  // namespace fracline
