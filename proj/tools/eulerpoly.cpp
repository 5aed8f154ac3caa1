#include "eulerpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return eulerpoly::run_cli(argc, argv, std::cout, std::cerr); }
