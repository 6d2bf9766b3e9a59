#include <iostream>

#include "dlpt/cli/app.hpp"

int main(int argc, char** argv) { return dlpt::cli::run(argc, argv, std::cout, std::cerr); }
