#include <iostream>

#include <nlsstab/cli.hpp>

int main(int argc, char** argv) { return nlsstab::cli::run(argc, argv, std::cout, std::cerr); }
