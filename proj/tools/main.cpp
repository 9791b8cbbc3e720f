#include "hillpt/cli.hpp"

int main(int argc, char** argv) { return hillpt::cli_main(argc, argv); }
