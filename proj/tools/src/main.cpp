#include <iostream>

#include "plates_cli/app.hpp"

int main(int argc, char** argv) { return plates_cli::run(argc, argv, std::cout, std::cerr); }
