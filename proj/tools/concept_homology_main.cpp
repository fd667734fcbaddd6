#include <iostream>
#include <string>
#include <vector>

#include "concept_homology/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return concept_homology::run_cli(args, std::cout, std::cerr);
}
