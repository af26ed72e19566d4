#include <iostream>

#include "greenbound/cli.hpp"

int main(int argc, char** argv) { return greenbound::cli::run(argc, argv, std::cout, std::cerr); }
