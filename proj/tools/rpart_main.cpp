#include <iostream>

#include "rpart/cli.hpp"

int main(int argc, char** argv) {
    return rpart::cli::main_entry(argc, argv, std::cout, std::cerr);
}
