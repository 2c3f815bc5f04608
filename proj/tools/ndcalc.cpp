#include "nda/cli.hpp"

int main(int argc, char** argv) { return nda::cli::run(argc, argv); }
