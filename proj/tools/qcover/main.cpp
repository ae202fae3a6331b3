#include <iostream>

#include "qcover/commands.hpp"

int main(int argc, char** argv) { return qcover::cli::run(argc, argv, std::cout, std::cerr); }
