#include <iostream>

#include "wordorder/cli.hpp"

int main(int argc, char** argv) {
  return wordorder::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                             std::cerr);
}
