#include <iostream>

#include "media/cli.hpp"

int main(int argc, char** argv) {
  return media::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
