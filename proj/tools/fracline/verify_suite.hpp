#pragma once

#include <string>
#include <vector>

#include "fracline/grid.hpp"

namespace fracline_cli {

struct VerifyRow {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

// Machine checks of the operator identities the library rests on. Every row
// computes one residual between two independent evaluation routes and
// compares it against a fixed tolerance. The grid is the only knob; inputs
// are seeded internally so runs are reproducible.
std::vector<VerifyRow> run_verify_suite(const fracline::GridSpec& grid);

}  // namespace fracline_cli
