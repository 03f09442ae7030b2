#include <iostream>
#include <string>
#include <vector>

#include "arithmaps/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arithmaps::run_cli(args, std::cout, std::cerr);
}
