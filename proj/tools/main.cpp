#include "cli.hpp"

int main(int argc, char** argv) { return nu2sigma::cli::run(argc, argv); }
