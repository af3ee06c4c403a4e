#include <iostream>

#include "qfdiv/cli.hpp"

int main(int argc, char** argv)
{
    return qfdiv::cli::run(argc, argv, std::cout, std::cerr);
}
