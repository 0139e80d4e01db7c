#include <iostream>

#include "qosc/cli.hpp"

int main(int argc, char** argv) {
  return qosc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
