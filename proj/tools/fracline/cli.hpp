#pragma once

namespace fracline_cli {

// Entry point of the `fracline` tool. Exit codes:
//   0  success
//   1  usage or runtime error
//   2  `check --strict` on coefficients that cannot be certified
//   3  `verify` with at least one failing identity
int run_cli(int argc, char** argv);

}  // namespace fracline_cli
