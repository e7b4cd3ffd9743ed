#include <iostream>

#include "mcf_cli/app.hpp"

int main(int argc, char** argv) { return mcf::cli::run(argc, argv, std::cout, std::cerr); }
