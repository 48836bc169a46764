#include <iostream>

#include "lequiv/cli.hpp"

int main(int argc, char** argv) {
  return lequiv::cli::dispatch(argc, argv, std::cout, std::cerr);
}
