#include "mimofbl/cli/run.hpp"

int main(int argc, char** argv) { return mimofbl::cli::run_main(argc, argv); }
