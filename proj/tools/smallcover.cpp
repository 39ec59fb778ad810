#include <iostream>
#include <string>
#include <vector>

#include "smallcover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return smallcover::cli::run(args, std::cout, std::cerr);
}
