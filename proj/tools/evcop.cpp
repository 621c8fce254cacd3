#include "evcop/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return evcop::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
