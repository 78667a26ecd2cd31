#include <iostream>
#include <string>
#include <vector>

#include "codoa/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return codoa::cli::main_entry(args, std::cout, std::cerr);
}
