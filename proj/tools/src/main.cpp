#include <iostream>

#include "rank2tools/app.hpp"

int main(int argc, char** argv) { return rank2::tools::run(argc, argv, std::cout, std::cerr); }
