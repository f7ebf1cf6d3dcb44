#include <iostream>
#include <string>
#include <vector>

#include "dynamo/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dynamo::run_cli(args, std::cout, std::cerr);
}
