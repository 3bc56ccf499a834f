#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return entropic::tools::run(argc, argv, std::cout, std::cerr); }
