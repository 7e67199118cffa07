#include <iostream>

#include "gbcount/commands.hpp"

int main(int argc, char** argv) { return gbcount::run_cli(argc, argv, std::cout, std::cerr); }
