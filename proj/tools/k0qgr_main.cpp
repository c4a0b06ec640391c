#include <iostream>

#include "k0qgr/cli.hpp"

int main(int argc, char** argv) { return k0qgr::cli::run(argc, argv, std::cout, std::cerr); }
