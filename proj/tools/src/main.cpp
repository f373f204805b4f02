#include "cli.hpp"

int main(int argc, char** argv) { return fiedler::cli::run(argc, argv); }
