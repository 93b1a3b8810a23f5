#include "cli.hpp"

int main(int argc, char** argv) { return fracline_cli::run_cli(argc, argv); }
