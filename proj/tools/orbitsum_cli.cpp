#include "orbitsum/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return orbitsum::cli::run_cli(argc, argv, std::cout, std::cerr);
}
