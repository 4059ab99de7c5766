#include "hpit/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return hpit::cli::run(argc, argv, std::cout, std::cerr); }
