#include <iostream>

#include "l2burau/cli.hpp"

int main(int argc, char** argv) { return l2b::run_cli(argc, argv, std::cout, std::cerr); }
