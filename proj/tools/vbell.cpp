#include <iostream>
#include <string>
#include <vector>

#include "vbell/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return vbell::cli::run(args, std::cout, std::cerr);
}
