#include "ctsurg/cli.hpp"

int main(int argc, char** argv) { return ctsurg::cli::run_main(argc, argv); }
