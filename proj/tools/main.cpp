#include <iostream>

#include "prettygood/cli.hpp"

int main(int argc, char** argv) {
    return prettygood::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
