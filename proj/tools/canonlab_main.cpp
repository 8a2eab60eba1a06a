#include <iostream>

#include "canonlab/cli.hpp"

int main(int argc, char** argv) {
    return canonlab::run_command_line(argc, argv, std::cout, std::cerr);
}
