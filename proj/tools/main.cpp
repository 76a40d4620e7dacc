#include <iostream>
#include <string>
#include <vector>

#include "latkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return latkit::run_cli(args, std::cout, std::cerr);
}
