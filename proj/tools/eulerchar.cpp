#include <eulerchar/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return ec::cli::run(argc, argv, std::cout, std::cerr); }
