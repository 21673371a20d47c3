#include <iostream>

#include "floquet_echo/cli/commands.hpp"

int main(int argc, char** argv) { return floquet_echo::cli::run(argc, argv, std::cout, std::cerr); }
