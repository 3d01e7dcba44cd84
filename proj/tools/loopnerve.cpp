#include <iostream>

#include "loopnerve/cli.hpp"

int main(int argc, char** argv) { return loopnerve::cli::run(argc, argv, std::cout, std::cerr); }
