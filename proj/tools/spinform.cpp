#include "spinsim/cli.hpp"

int main(int argc, char** argv) { return spinsim::cli::dispatch(argc, argv); }
