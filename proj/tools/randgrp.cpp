#include <iostream>

#include "randgrp/cli.hpp"

int main(int argc, char** argv) {
  return randgrp::cli_main(argc, argv, std::cout, std::cerr);
}
