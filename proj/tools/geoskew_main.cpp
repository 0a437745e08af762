#include <iostream>

#include "geoskew/cli.hpp"

int main(int argc, char** argv) { return geoskew::cli::run(argc, argv, std::cout, std::cerr); }
