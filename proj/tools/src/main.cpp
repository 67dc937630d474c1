#include <iostream>

#include "leaderline_cli/cli.hpp"

int main(int argc, char** argv) { return leaderline::cli::run(argc, argv, std::cout, std::cerr); }
