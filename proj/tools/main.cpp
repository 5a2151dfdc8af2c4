#include <iostream>

#include "ieq/harness/commands.hpp"

int main(int argc, char** argv) { return ieq::harness::run(argc, argv, std::cout, std::cerr); }
