#include "fdg/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fdg::run_cli(args, std::cin, std::cout, std::cerr);
}
