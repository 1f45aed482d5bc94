#include "vcne/cli.hpp"

int main(int argc, char** argv) { return vcne::cli::run(argc, argv); }
