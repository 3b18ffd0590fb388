#include <iostream>

#include "ratkit/cli.hpp"

int main(int argc, char** argv) { return ratkit::run(argc, argv, std::cout, std::cerr); }
