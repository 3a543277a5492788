#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return arithconv::run(argc, argv, std::cout, std::cerr); }
