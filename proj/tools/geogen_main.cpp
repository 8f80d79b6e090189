#include "geogen/cli/run.hpp"

int main(int argc, char** argv) { return geogen::cli::run(argc, argv); }
