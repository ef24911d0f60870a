#include "reldyn/cli.hpp"

int main(int argc, char** argv) { return reldyn::cli::run(argc, argv); }
