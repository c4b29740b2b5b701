#include <iostream>
#include <string>
#include <vector>

#include "msm/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return msm::run_cli(args, std::cout, std::cerr);
}
