#include "latch/cli.hpp"

int main(int argc, char** argv) { return latch::cli::run(argc, argv); }
