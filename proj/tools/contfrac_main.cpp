#include <iostream>
#include <string>
#include <vector>

#include "contfrac/cli.hpp"

int main(int argc, char** argv)
{
    return contfrac::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
