#pragma once

#include <stdexcept>

namespace fracline {

// Base class for every contract violation this library reports.
// Plain argument mistakes (bad sizes, out-of-range orders) throw
// std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two sampled objects live on different grids.
struct GridMismatchError : Error {
    using Error::Error;
};

// A spectrum fed to inverse_transform is not conjugate-symmetric, i.e. it
// does not describe a real function within tolerance.
struct SymmetryViolationError : Error {
    using Error::Error;
};

// The multiplier of a fractional integral is singular at xi = 0.
struct SingularSymbolError : Error {
    using Error::Error;
};

// More grid frequencies than a conjugate pair fell below the solve
// threshold |H| < 1e-6 |b|.
struct NearSingularSymbolError : Error {
    using Error::Error;
};

// A fractional integral was applied to an input with nonzero mean.
struct NonzeroMeanError : Error {
    using Error::Error;
};

// The operation needs a closed-form input (dilation of file-loaded samples).
struct UnsupportedInputError : Error {
    using Error::Error;
};

// A stability constant was requested from a report that is not certified.
struct NoCertificateError : Error {
    using Error::Error;
};

// The regularity gain is unbounded because the symbol vanishes on the grid.
struct InfiniteGainError : Error {
    using Error::Error;
};

// File I/O or format failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace fracline
