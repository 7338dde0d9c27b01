#include <iostream>

#include "hypercalc/cli.hpp"

int main(int argc, char** argv) { return hypercalc::dispatch({argv, argv + argc}, std::cout, std::cerr); }
