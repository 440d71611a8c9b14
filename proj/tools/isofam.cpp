#include <iostream>

#include "isofam/cli.hpp"

int main(int argc, char** argv) {
    return isofam::run_cli(argc, argv, std::cout, std::cerr);
}
