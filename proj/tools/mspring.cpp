#include <iostream>

#include "mspring/cli.hpp"

int main(int argc, char** argv)
{
    return mspring::cli::run(argc, argv, std::cout);
}
