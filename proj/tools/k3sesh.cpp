#include <iostream>

#include "k3sesh/cli.hpp"

int main(int argc, char** argv) { return k3sesh::cli::run(argc, argv, std::cout, std::cerr); }
