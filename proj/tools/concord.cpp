#include "concord/cli.hpp"

int main(int argc, char** argv) { return concord::cli::main(argc, argv); }
