#include "malg/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return malg::cli::run(argc, argv, std::cout, std::cerr); }
