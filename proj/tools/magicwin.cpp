#include <iostream>

#include "magicwin/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return magicwin::run_cli(args, std::cout, std::cerr);
}
