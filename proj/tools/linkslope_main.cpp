#include "linkslope/cli.hpp"

int main(int argc, char** argv) { return linkslope::run_cli(argc, argv); }
