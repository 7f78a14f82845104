#include <iostream>

#include "altlink/cli.hpp"

int main(int argc, char** argv) {
    return altlink::cli::run(argc, argv, std::cout, std::cerr);
}
