#include <iostream>

#include "entwine/cli.hpp"

int main(int argc, char** argv) {
  return entwine::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
