#include "fracspline/cli.hpp"

int main(int argc, char** argv) { return fracspline::cli::main(argc, argv); }
