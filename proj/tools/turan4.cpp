#include <iostream>

#include "turan4/cli.hpp"

int main(int argc, char** argv) { return turan4::run_cli(argc, argv, std::cout, std::cerr); }
