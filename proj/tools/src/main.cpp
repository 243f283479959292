// SPDX-License-Identifier: MIT
#include <iostream>

#include "lattice_rotor_cli/commands.hpp"

int main(int argc, char** argv) { return lattice_rotor::cli::run(argc, argv, std::cout, std::cerr); }
