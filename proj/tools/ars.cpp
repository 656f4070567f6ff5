#include "ars/cli.hpp"

int main(int argc, char** argv) { return ars::cli::main(argc, argv); }
